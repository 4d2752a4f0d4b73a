#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sdym/gauge.hpp"

namespace sdym {

enum class Variant { AntiInstanton, Instanton };
const char* to_string(Variant v);

/// kappa = k1 + k2 i + k3 j + k4 k.
Quaternion kappa(const MultiIndex& k);

/// Quaternionic coordinate 0-form x with x_k = kappa; d^c x = e.
QForm coordinate_form();

/// f_k = conj(kappa) / (1 + |kappa|^2) for the anti-instanton,
/// f_k = kappa / (1 + |kappa|^2) for the instanton.
QForm instanton_generator(Variant v);

/// A = Im(f cup e) with the anti-instanton generator.
Connection build_anti_instanton();
/// A = Im(f cup e-bar) with the instanton generator.
Connection build_instanton();
Connection build(Variant v);

/// Pure gauge connection A = Im(x^{-1} cup d^c x); singular at kappa = 0.
Connection pure_gauge_connection();

/// M_i(k) = 1 / ((1 + |kappa|^2)(1 + |tau_i kappa|^2)), axis in 1..4.
Rational weight(const MultiIndex& k, int axis);
/// M_mu = 1 / (2 (1 + 4 mu^2)(1 + mu + 2 mu^2)): the common value of all
/// four weights at (mu, mu, mu, mu).
Rational diagonal_weight(std::int64_t mu);

/// The six curvature components of the anti-instanton or instanton written
/// out in closed form in the weights M_i and the coordinates of k. Pair
/// order 12, 13, 14, 23, 24, 34.
CurvatureComponents closed_form_curvature(Variant v, const MultiIndex& k);

/// Real part of F_k^{ij}: M_i (k_i k_j + k_j) - M_j (k_i k_j + k_i).
Rational closed_form_real_part(const MultiIndex& k, int i, int j);

/// Curvature at (mu, mu, mu, mu) in diagonal form:
/// anti-instanton M_mu (2 - 2 mu){(e12 - e34) i + (e13 + e24) j + (e14 - e23) k},
/// instanton M_mu (2 mu - 2){(e12 + e34) i + (e13 - e24) j + (e14 + e23) k}.
CurvatureComponents diagonal_curvature(Variant v, std::int64_t mu);

/// The diagonal curvature as a 2-form supported on diagonal indices of
/// [mu_lo, mu_hi]^4 (zero off the diagonal).
QForm diagonal_curvature_form(Variant v, std::int64_t mu_lo, std::int64_t mu_hi);

/// omega = sum_mu M_mu (1 - mu) x^mu, zero off the diagonal.
QForm omega_form();

/// omega cup e-bar cup e (anti-instanton) or omega cup e cup e-bar (instanton).
QForm omega_factorization(Variant v);

struct ShellDeviation {
  std::int64_t radius = 0;
  std::size_t points = 0;
  /// max over the shell and i of norm_sq(Im(f cup e) - Im(x^{-1} cup d^c x)).
  Rational max_norm_sq;
};

/// Deviation of the anti-instanton from the pure gauge on the shell
/// max |k_a| = radius. Throws std::invalid_argument for radius < 1.
ShellDeviation shell_deviation(std::int64_t radius);

struct GaugeAtInfinityCheck {
  Box region;
  std::size_t components = 0;
  std::size_t mismatches = 0;
  Rational worst;
  [[nodiscard]] bool passed() const { return mismatches == 0; }
};

/// Gauge transforms the unprojected anti-instanton f cup e by g = x^{-1}
/// (imaginary part taken, since |g| != 1) and compares with
/// Im((sum_k conj(y_k) / (1 + |y_k|^2) x^k) cup d^c y), y = x^{-1}, on
/// `region`. Throws SingularGaugeError if kappa = 0 is read.
GaugeAtInfinityCheck gauge_at_infinity(const Box& region);

struct AsymptoticReport {
  std::vector<ShellDeviation> shells;
  bool strictly_decreasing = false;
  GaugeAtInfinityCheck gauge;
};

/// Shell deviations for radii 2..max_radius (max_radius >= 2 required,
/// otherwise std::invalid_argument) together with gauge_at_infinity(region).
AsymptoticReport asymptotic_gauge_check(std::int64_t max_radius, const Box& region);

}  // namespace sdym
