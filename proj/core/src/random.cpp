#include "sdym/random.hpp"

namespace sdym {

namespace {

// Integer quadruples with a^2 + b^2 + c^2 + d^2 a perfect square, |.| <= 6.
const std::vector<std::array<std::int64_t, 5>>& unit_table() {
  static const auto table = [] {
    std::vector<std::array<std::int64_t, 5>> t;
    for (std::int64_t a = -6; a <= 6; ++a)
      for (std::int64_t b = -6; b <= 6; ++b)
        for (std::int64_t c = -6; c <= 6; ++c)
          for (std::int64_t d = -6; d <= 6; ++d) {
            const std::int64_t s = a * a + b * b + c * c + d * d;
            for (std::int64_t n = 1; n * n <= s; ++n) {
              if (n * n == s) t.push_back({a, b, c, d, n});
            }
          }
    return t;
  }();
  return table;
}

}  // namespace

RationalSampler::RationalSampler(std::uint64_t seed, std::int64_t max_numerator,
                                 std::int64_t max_denominator)
    : engine_(seed), max_numerator_(max_numerator), max_denominator_(max_denominator) {}

std::int64_t RationalSampler::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational RationalSampler::rational() {
  const std::int64_t num = integer(-max_numerator_, max_numerator_);
  return {num, integer(1, max_denominator_)};
}

Quaternion RationalSampler::quaternion() { return {rational(), rational(), rational(), rational()}; }

Quaternion RationalSampler::imaginary_quaternion() { return {0, rational(), rational(), rational()}; }

Quaternion RationalSampler::invertible_quaternion() {
  while (true) {
    Quaternion q = quaternion();
    if (!q.is_zero()) return q;
  }
}

Quaternion RationalSampler::unit_quaternion() {
  const auto& t = unit_table();
  const auto& [a, b, c, d, n] = t[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(t.size()) - 1))];
  return {Rational(a, n), Rational(b, n), Rational(c, n), Rational(d, n)};
}

Matrix2C RationalSampler::matrix() {
  Matrix2C m;
  for (auto& z : m.m) z = {rational(), rational()};
  return m;
}

QForm random_form(RationalSampler& rng, int degree, const Box& region, bool doubled) {
  return QForm::tabulate(degree, region, [&rng](const MultiIndex&, DirSet) { return rng.quaternion(); },
                         doubled);
}

MForm random_matrix_form(RationalSampler& rng, int degree, const Box& region, bool doubled) {
  return MForm::tabulate(degree, region, [&rng](const MultiIndex&, DirSet) { return rng.matrix(); },
                         doubled);
}

QForm random_invertible_form(RationalSampler& rng, const Box& region) {
  return QForm::tabulate(0, region,
                         [&rng](const MultiIndex&, DirSet) { return rng.invertible_quaternion(); });
}

QForm random_su2_connection(RationalSampler& rng, const Box& region) {
  return QForm::tabulate(1, region,
                         [&rng](const MultiIndex&, DirSet) { return rng.imaginary_quaternion(); });
}

QForm random_unit_gauge(RationalSampler& rng, const Box& region) {
  return QForm::tabulate(0, region, [&rng](const MultiIndex&, DirSet) { return rng.unit_quaternion(); });
}

}  // namespace sdym
