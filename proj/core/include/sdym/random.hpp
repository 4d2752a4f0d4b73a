#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sdym/form.hpp"
#include "sdym/gauge.hpp"

namespace sdym {

/// Seeded source of small exact rationals. The mapping from engine output to
/// values uses plain modular reduction, so a seed yields the same values on
/// every platform (std::uniform_int_distribution does not guarantee that).
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, std::int64_t max_numerator = 5,
                           std::int64_t max_denominator = 4);

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  Rational rational();
  Quaternion quaternion();
  Quaternion imaginary_quaternion();
  /// Nonzero quaternion.
  Quaternion invertible_quaternion();
  /// Unit quaternion (a + b i + c j + d k) / n with a^2 + b^2 + c^2 + d^2 = n^2.
  Quaternion unit_quaternion();
  Matrix2C matrix();

 private:
  std::mt19937_64 engine_;
  std::int64_t max_numerator_;
  std::int64_t max_denominator_;
};

QForm random_form(RationalSampler& rng, int degree, const Box& region, bool doubled = false);
MForm random_matrix_form(RationalSampler& rng, int degree, const Box& region, bool doubled = false);
/// 0-form with nonzero coefficients.
QForm random_invertible_form(RationalSampler& rng, const Box& region);
/// su(2)-valued 1-form on `region`.
QForm random_su2_connection(RationalSampler& rng, const Box& region);
/// Unit-norm 0-form on `region`.
QForm random_unit_gauge(RationalSampler& rng, const Box& region);

}  // namespace sdym
