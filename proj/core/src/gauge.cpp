#include "sdym/gauge.hpp"

#include <stdexcept>
#include <string>

#include "sdym/errors.hpp"

namespace sdym {

namespace {

const std::vector<DirSet>& pairs() { return subsets_of_size(2); }

}  // namespace

Connection Connection::from_potential(QForm a) {
  if (a.degree() != 1) throw DegreeError("Connection: potential must be a 1-form");
  return Connection{std::move(a), std::nullopt, Frame::E};
}

Connection Connection::from_generator(QForm f, Frame frame) {
  if (f.degree() != 0) throw DegreeError("Connection: generator must be a 0-form");
  QForm raw = cup(f, unit_frame(frame == Frame::EBar));
  return Connection{imaginary_part(raw), std::move(f), frame};
}

QForm Connection::unprojected() const {
  if (!generator) throw std::logic_error("Connection: no generating 0-form");
  return cup(*generator, unit_frame(frame == Frame::EBar));
}

QForm curvature(const QForm& potential) {
  if (potential.degree() != 1) throw DegreeError("curvature: potential must be a 1-form");
  return coboundary(potential) + cup(potential, potential);
}

QForm quaternionic_curvature(const Connection& a) {
  if (!a.generator) throw std::logic_error("quaternionic_curvature: connection has no generator");
  const QForm frame = unit_frame(a.frame == Frame::EBar);
  const QForm raw = cup(*a.generator, frame);
  return imaginary_part(cup(coboundary(*a.generator), frame) + cup(raw, raw));
}

QForm covariant_differential(const QForm& potential, const QForm& omega) {
  if (potential.degree() != 1) throw DegreeError("covariant_differential: potential must be a 1-form");
  const int p = omega.degree();
  if (p >= kDim) throw DegreeError("covariant_differential: degree of Omega must be at most 3");
  const QForm twisted = cup(omega, potential);
  return coboundary(omega) + cup(potential, omega) + ((p + 1) % 2 == 0 ? twisted : -twisted);
}

YangMillsResiduals ym_residuals(const QForm& potential) {
  const QForm f = curvature(potential);
  return {covariant_differential(potential, f), covariant_differential(potential, star(iota(f)))};
}

GaugeTransform GaugeTransform::checked(QForm g, const Box& region) {
  if (g.degree() != 0) throw DegreeError("GaugeTransform: gauge must be a 0-form");
  for (const auto& k : region.points()) {
    if (norm_sq(g.at(k, DirSet{})) != Rational(1)) {
      throw DomainError("GaugeTransform: |g| != 1 at " + k.to_string());
    }
  }
  return GaugeTransform(std::move(g));
}

GaugeTransform GaugeTransform::constant(const Quaternion& g) {
  if (norm_sq(g) != Rational(1)) throw DomainError("GaugeTransform: constant gauge must have unit norm");
  return GaugeTransform(constant_form<Quaternion>(0, g));
}

QForm gauge_transform(const QForm& potential, const GaugeTransform& g) {
  const QForm ginv = g.inverse();
  return cup(cup(ginv, potential), g.form()) + cup(ginv, coboundary(g.form()));
}

QForm gauge_transform(const QForm& potential, const QForm& g, const Box& region) {
  if (g.degree() != 0) throw DegreeError("gauge_transform: gauge must be a 0-form");
  // The transformed form reads g at k and at tau_i k.
  const Box touched = region.grow_upper();
  bool unit = true;
  for (const auto& k : touched.points()) {
    Quaternion v;
    try {
      v = g.at(k, DirSet{});
    } catch (const SingularCoefficientError& err) {
      throw SingularGaugeError(std::string("gauge_transform: g is singular at ") + k.to_string(), err.where());
    }
    if (v.is_zero()) throw SingularGaugeError("gauge_transform: g vanishes at " + k.to_string(), k);
    if (norm_sq(v) != Rational(1)) unit = false;
  }
  const QForm gt = g.materialize(touched);
  const QForm ginv = inverse(gt);
  const QForm out = cup(cup(ginv, potential), gt) + cup(ginv, coboundary(gt));
  return (unit ? out : imaginary_part(out)).materialize(region);
}

Su2Residuals su2_residuals(const QForm& curvature, const Box& region) {
  if (curvature.degree() != 2) throw DegreeError("su2_residuals: curvature must be a 2-form");
  Su2Residuals out;
  for (const auto& k : region.points()) {
    for (DirSet d : pairs()) out.emplace(Cell{k, d, curvature.doubled()}, curvature.at(k, d).re);
  }
  return out;
}

std::array<Rational, 6> su2_conditions(const QForm& generator, const MultiIndex& k) {
  // f[s] = f_k^s, t[a][s] = f_{tau_a k}^s with s, a in 1..4.
  const auto comps = [&](const MultiIndex& m) { return generator.at(m, DirSet{}).components(); };
  const auto f0 = comps(k);
  auto f = [&](int s) -> const Rational& { return f0[static_cast<std::size_t>(s - 1)]; };
  std::array<std::array<Rational, 4>, 4> shifted;
  for (int a = 1; a <= kDim; ++a) shifted[static_cast<std::size_t>(a - 1)] = comps(shift(k, a));
  auto t = [&](int a, int s) -> const Rational& {
    return shifted[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(s - 1)];
  };
  return {
      -f(2) * t(1, 1) - f(3) * t(1, 4) + f(4) * t(1, 3) + f(1) * t(2, 2) + f(4) * t(2, 3) - f(3) * t(2, 4),
      f(2) * t(1, 4) - f(3) * t(1, 1) - f(4) * t(1, 2) - f(4) * t(3, 2) + f(1) * t(3, 3) + f(2) * t(3, 4),
      -f(2) * t(1, 3) + f(3) * t(1, 2) - f(4) * t(1, 1) + f(3) * t(4, 2) - f(2) * t(4, 3) + f(1) * t(4, 4),
      f(1) * t(2, 4) - f(4) * t(2, 1) + f(3) * t(2, 2) - f(4) * t(3, 1) + f(1) * t(3, 4) - f(2) * t(3, 3),
      -f(1) * t(2, 3) + f(4) * t(2, 2) + f(3) * t(2, 1) + f(3) * t(4, 1) - f(2) * t(4, 4) - f(1) * t(4, 3),
      f(4) * t(3, 3) + f(1) * t(3, 2) - f(2) * t(3, 1) - f(3) * t(4, 4) - f(2) * t(4, 1) + f(1) * t(4, 2),
  };
}

const char* to_string(Duality d) {
  switch (d) {
    case Duality::SelfDual: return "self-dual";
    case Duality::AntiSelfDual: return "anti-self-dual";
    case Duality::Flat: return "flat";
    case Duality::Neither: return "neither";
  }
  return "neither";
}

QForm self_dual_residual(const QForm& f) { return f - iota(star(f)); }

QForm anti_self_dual_residual(const QForm& f) { return f + iota(star(f)); }

CurvatureComponents components_at(const QForm& curvature, const MultiIndex& k) {
  CurvatureComponents out;
  const auto& ps = pairs();
  for (std::size_t n = 0; n < ps.size(); ++n) out[n] = curvature.at(k, ps[n]);
  return out;
}

DualityReport duality_classify(const QForm& curvature, const Box& region) {
  if (curvature.degree() != 2) throw DegreeError("duality_classify: curvature must be a 2-form");
  DualityReport report;
  report.region = region;
  bool sd = true;
  bool asd = true;
  for (const auto& k : region.points()) {
    const CurvatureComponents c = components_at(curvature, k);
    // pair order: 0=12 1=13 2=14 3=23 4=24 5=34
    DualityEntry e{k,
                   {c[0] - c[5], c[1] + c[4], c[2] - c[3]},
                   {c[0] + c[5], c[1] - c[4], c[2] + c[3]},
                   {c[0].re, c[1].re, c[2].re, c[3].re, c[4].re, c[5].re}};
    for (const auto& q : e.self_dual) {
      if (!q.is_zero()) sd = false;
      if (norm_sq(q) > report.worst_self_dual) report.worst_self_dual = norm_sq(q);
    }
    for (const auto& q : e.anti_self_dual) {
      if (!q.is_zero()) asd = false;
      if (norm_sq(q) > report.worst_anti_self_dual) report.worst_anti_self_dual = norm_sq(q);
    }
    for (const auto& r : e.su2) {
      if (r.abs() > report.worst_su2) report.worst_su2 = r.abs();
    }
    report.entries.push_back(std::move(e));
  }
  report.classification = sd && asd ? Duality::Flat
                          : sd      ? Duality::SelfDual
                          : asd     ? Duality::AntiSelfDual
                                    : Duality::Neither;
  return report;
}

}  // namespace sdym
