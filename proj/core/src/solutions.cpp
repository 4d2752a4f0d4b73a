#include "sdym/solutions.hpp"

#include <stdexcept>

#include "sdym/errors.hpp"

namespace sdym {

const char* to_string(Variant v) {
  return v == Variant::AntiInstanton ? "anti-instanton" : "instanton";
}

Quaternion kappa(const MultiIndex& k) { return {k[1], k[2], k[3], k[4]}; }

QForm coordinate_form() {
  return QForm::from_rule(0, [](const MultiIndex& k, DirSet) { return kappa(k); });
}

QForm instanton_generator(Variant v) {
  return QForm::from_rule(0, [v](const MultiIndex& k, DirSet) {
    const Quaternion q = kappa(k);
    const Rational scale = Rational(1) / (Rational(1) + norm_sq(q));
    return (v == Variant::AntiInstanton ? conj(q) : q) * scale;
  });
}

Connection build_anti_instanton() {
  return Connection::from_generator(instanton_generator(Variant::AntiInstanton), Frame::E);
}

Connection build_instanton() {
  return Connection::from_generator(instanton_generator(Variant::Instanton), Frame::EBar);
}

Connection build(Variant v) {
  return v == Variant::AntiInstanton ? build_anti_instanton() : build_instanton();
}

Connection pure_gauge_connection() {
  return Connection::from_generator(inverse(coordinate_form()), Frame::E);
}

Rational weight(const MultiIndex& k, int axis) {
  const Rational a = Rational(1) + norm_sq(kappa(k));
  const Rational b = Rational(1) + norm_sq(kappa(shift(k, axis)));
  return Rational(1) / (a * b);
}

Rational diagonal_weight(std::int64_t mu) {
  const Rational m(mu);
  return Rational(1) / (Rational(2) * (Rational(1) + Rational(4) * m * m) *
                        (Rational(1) + m + Rational(2) * m * m));
}

namespace {

// Shared building blocks of the closed-form listings.
struct Coordinates {
  Rational k1, k2, k3, k4;
  Rational M1, M2, M3, M4;

  explicit Coordinates(const MultiIndex& k)
      : k1(k[1]), k2(k[2]), k3(k[3]), k4(k[4]),
        M1(weight(k, 1)), M2(weight(k, 2)), M3(weight(k, 3)), M4(weight(k, 4)) {}

  // 1 + k_b^2 - k_a^2 - k_a
  static Rational d(const Rational& a, const Rational& b) {
    return Rational(1) + b * b - a * a - a;
  }
};

CurvatureComponents anti_instanton_closed_form(const MultiIndex& k) {
  const Coordinates c(k);
  const auto& [k1, k2, k3, k4, M1, M2, M3, M4] = c;
  const auto d = &Coordinates::d;
  return {
      Quaternion{M1 * (k1 * k2 + k2) - M2 * (k1 * k2 + k1),
                 M1 * d(k1, k2) + M2 * d(k2, k1),
                 M1 * (k4 * k1 + k2 * k3) - M2 * (k3 * k2 + k4 * k1),
                 M1 * (k2 * k4 - k1 * k3) + M2 * (k1 * k3 - k2 * k4)},
      Quaternion{M1 * (k1 * k3 + k3) - M3 * (k1 * k3 + k1),
                 M1 * (k2 * k3 - k1 * k4) + M3 * (k1 * k4 - k2 * k3),
                 M1 * d(k1, k3) + M3 * d(k3, k1),
                 M1 * (k1 * k2 + k3 * k4) - M3 * (k3 * k4 + k1 * k2)},
      Quaternion{M1 * (k1 * k4 + k4) - M4 * (k1 * k4 + k1),
                 M1 * (k1 * k3 + k2 * k4) - M4 * (k2 * k4 + k1 * k3),
                 M1 * (k3 * k4 - k1 * k2) + M4 * (k1 * k2 - k3 * k4),
                 M1 * d(k1, k4) + M4 * d(k4, k1)},
      Quaternion{M2 * (k2 * k3 + k3) - M3 * (k2 * k3 + k2),
                 -M2 * (k2 * k4 + k1 * k3) + M3 * (k1 * k3 + k2 * k4),
                 M2 * (k3 * k4 - k1 * k2) + M3 * (k1 * k2 - k3 * k4),
                 -(M2 * d(k2, k3) + M3 * d(k3, k2))},
      Quaternion{M2 * (k2 * k4 + k4) - M4 * (k2 * k4 + k2),
                 M2 * (k2 * k3 - k4 * k1) + M4 * (k1 * k4 - k2 * k3),
                 M2 * d(k2, k4) + M4 * d(k4, k2),
                 -(M2 * (k1 * k2 + k3 * k4) - M4 * (k3 * k4 + k1 * k2))},
      Quaternion{M3 * (k3 * k4 + k4) - M4 * (k3 * k4 + k3),
                 -(M3 * d(k3, k4) + M4 * d(k4, k3)),
                 M3 * (-k2 * k3 - k1 * k4) + M4 * (k1 * k4 + k2 * k3),
                 M3 * (k2 * k4 - k1 * k3) + M4 * (k1 * k3 - k2 * k4)},
  };
}

CurvatureComponents instanton_closed_form(const MultiIndex& k) {
  const Coordinates c(k);
  const auto& [k1, k2, k3, k4, M1, M2, M3, M4] = c;
  const auto d = &Coordinates::d;
  return {
      Quaternion{M1 * (k1 * k2 + k2) - M2 * (k1 * k2 + k1),
                 -M1 * d(k1, k2) - M2 * d(k2, k1),
                 M1 * (k4 * k1 - k2 * k3) + M2 * (k3 * k2 - k4 * k1),
                 M1 * (-k2 * k4 - k1 * k3) + M2 * (k1 * k3 + k2 * k4)},
      Quaternion{M1 * (k1 * k3 + k3) - M3 * (k1 * k3 + k1),
                 M1 * (-k2 * k3 - k1 * k4) + M3 * (k1 * k4 + k2 * k3),
                 -(M1 * d(k1, k3) + M3 * d(k3, k1)),
                 M1 * (k1 * k2 - k3 * k4) + M3 * (k3 * k4 - k1 * k2)},
      Quaternion{M1 * (k1 * k4 + k4) - M4 * (k1 * k4 + k1),
                 M1 * (k1 * k3 - k2 * k4) + M4 * (k2 * k4 - k1 * k3),
                 M1 * (-k3 * k4 - k1 * k2) + M4 * (k1 * k2 + k3 * k4),
                 -(M1 * d(k1, k4) + M4 * d(k4, k1))},
      Quaternion{M2 * (k2 * k3 + k3) - M3 * (k2 * k3 + k2),
                 M2 * (-k2 * k4 + k1 * k3) + M3 * (-k1 * k3 + k2 * k4),
                 M2 * (k3 * k4 + k1 * k2) - M3 * (k1 * k2 + k3 * k4),
                 -(M2 * d(k2, k3) + M3 * d(k3, k2))},
      Quaternion{M2 * (k2 * k4 + k4) - M4 * (k2 * k4 + k2),
                 M2 * (k2 * k3 + k4 * k1) - M4 * (k1 * k4 + k2 * k3),
                 M2 * d(k2, k4) + M4 * d(k4, k2),
                 M2 * (k1 * k2 - k3 * k4) + M4 * (k3 * k4 - k1 * k2)},
      Quaternion{M3 * (k3 * k4 + k4) - M4 * (k3 * k4 + k3),
                 -(M3 * d(k3, k4) + M4 * d(k4, k3)),
                 M3 * (-k2 * k3 + k1 * k4) + M4 * (-k1 * k4 + k2 * k3),
                 M3 * (k2 * k4 + k1 * k3) - M4 * (k1 * k3 + k2 * k4)},
  };
}

}  // namespace

CurvatureComponents closed_form_curvature(Variant v, const MultiIndex& k) {
  return v == Variant::AntiInstanton ? anti_instanton_closed_form(k) : instanton_closed_form(k);
}

Rational closed_form_real_part(const MultiIndex& k, int i, int j) {
  const Rational ki(k[i]);
  const Rational kj(k[j]);
  return weight(k, i) * (ki * kj + kj) - weight(k, j) * (ki * kj + ki);
}

CurvatureComponents diagonal_curvature(Variant v, std::int64_t mu) {
  const bool anti = v == Variant::AntiInstanton;
  const Rational c = diagonal_weight(mu) * (anti ? Rational(2 - 2 * mu) : Rational(2 * mu - 2));
  // anti: (e12 - e34) i + (e13 + e24) j + (e14 - e23) k
  // inst: (e12 + e34) i + (e13 - e24) j + (e14 + e23) k
  const Rational s = anti ? -c : c;
  return {Quaternion{0, c, 0, 0}, Quaternion{0, 0, c, 0}, Quaternion{0, 0, 0, c},
          Quaternion{0, 0, 0, s}, Quaternion{0, 0, -s, 0}, Quaternion{0, s, 0, 0}};
}

QForm diagonal_curvature_form(Variant v, std::int64_t mu_lo, std::int64_t mu_hi) {
  return QForm::tabulate(2, Box::cube(mu_lo, mu_hi), [v](const MultiIndex& k, DirSet d) {
    if (!k.is_diagonal()) return Quaternion::zero();
    const auto& ps = subsets_of_size(2);
    const auto comps = diagonal_curvature(v, k[1]);
    for (std::size_t n = 0; n < ps.size(); ++n) {
      if (ps[n] == d) return comps[n];
    }
    return Quaternion::zero();
  });
}

QForm omega_form() {
  return QForm::from_rule(0, [](const MultiIndex& k, DirSet) {
    if (!k.is_diagonal()) return Quaternion::zero();
    const std::int64_t mu = k[1];
    return Quaternion::real(diagonal_weight(mu) * Rational(1 - mu));
  });
}

QForm omega_factorization(Variant v) {
  const QForm e = unit_frame(false);
  const QForm ebar = unit_frame(true);
  return v == Variant::AntiInstanton ? cup(cup(omega_form(), ebar), e)
                                     : cup(cup(omega_form(), e), ebar);
}

ShellDeviation shell_deviation(std::int64_t radius) {
  if (radius < 1) throw std::invalid_argument("shell_deviation: radius must be positive");
  const QForm anti = build_anti_instanton().potential;
  const QForm pure = pure_gauge_connection().potential;
  ShellDeviation out{radius, 0, Rational(0)};
  for (const auto& k : shell(radius)) {
    ++out.points;
    for (DirSet d : subsets_of_size(1)) {
      const Rational n = norm_sq(anti.at(k, d) - pure.at(k, d));
      if (n > out.max_norm_sq) out.max_norm_sq = n;
    }
  }
  return out;
}

GaugeAtInfinityCheck gauge_at_infinity(const Box& region) {
  const QForm x = coordinate_form();
  const QForm raw = build_anti_instanton().unprojected();
  // g = x^{-1}; gauge_transform reports kappa = 0 as a singular gauge.
  QForm g = QForm::from_rule(0, [](const MultiIndex& k, DirSet) {
    const Quaternion q = kappa(k);
    return q.is_zero() ? Quaternion::zero() : inverse(q);
  });
  const QForm transformed = gauge_transform(raw, g, region);

  const Box touched = region.grow_upper();
  const QForm y = inverse(x, touched);
  const QForm h = QForm::make(0, false, touched, [y](const MultiIndex& k, DirSet d) {
    const Quaternion yk = y.at(k, d);
    return conj(yk) * (Rational(1) / (Rational(1) + norm_sq(yk)));
  });
  const QForm expected = imaginary_part(cup(h, coboundary(y)));

  const auto cmp = compare(transformed, expected, region);
  return {region, cmp.components, cmp.mismatches, cmp.worst};
}

AsymptoticReport asymptotic_gauge_check(std::int64_t max_radius, const Box& region) {
  if (max_radius < 2) throw std::invalid_argument("asymptotic_gauge_check: radius must be at least 2");
  AsymptoticReport out;
  for (std::int64_t r = 2; r <= max_radius; ++r) out.shells.push_back(shell_deviation(r));
  out.strictly_decreasing = true;
  for (std::size_t n = 1; n < out.shells.size(); ++n) {
    if (!(out.shells[n].max_norm_sq < out.shells[n - 1].max_norm_sq)) out.strictly_decreasing = false;
  }
  out.gauge = gauge_at_infinity(region);
  return out;
}

}  // namespace sdym
