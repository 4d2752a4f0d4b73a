#include "doctest.h"

#include "oracles.hpp"
#include "sdym/errors.hpp"
#include "sdym/solutions.hpp"

using namespace sdym;

namespace {

const MultiIndex K0{0, 0, 0, 0};
const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();
const Box kWindow = Box::cube(-2, 2);

MultiIndex diag(std::int64_t mu) { return {mu, mu, mu, mu}; }

bool same(const QForm& a, const QForm& b, const Box& region) { return compare(a, b, region).equal(); }

}  // namespace

TEST_CASE("coordinate form") {
  CHECK(kappa(MultiIndex{1, -2, 3, 0}) == Quaternion{1, -2, 3, 0});
  CHECK(same(coboundary(coordinate_form()), unit_frame(), Box::cube(-3, 3)));
}

TEST_CASE("anti-instanton potential") {
  const Connection a = build_anti_instanton();
  CHECK(a.frame == Frame::E);
  CHECK_FALSE(a.potential.windowed());
  for (int axis = 1; axis <= 4; ++axis) CHECK(a.potential.at(K0, DirSet{axis}) == Quaternion::zero());
  CHECK(a.potential.at(MultiIndex{1, 0, 0, 0}, DirSet{2}) == Quaternion{0, Rational(1, 2), 0, 0});
  for (const auto& k : kWindow.points()) {
    const Rational den = Rational(1) + norm_sq(kappa(k));
    const Rational s = Rational(1) / den;
    CHECK(a.potential.at(k, DirSet{1}) == Quaternion{0, -k[2], -k[3], -k[4]} * s);
    CHECK(a.potential.at(k, DirSet{2}) == Quaternion{0, k[1], -k[4], k[3]} * s);
    CHECK(a.potential.at(k, DirSet{3}) == Quaternion{0, k[4], k[1], -k[2]} * s);
    CHECK(a.potential.at(k, DirSet{4}) == Quaternion{0, -k[3], k[2], k[1]} * s);
    for (int axis = 1; axis <= 4; ++axis) CHECK(is_su2_valued(a.potential.at(k, DirSet{axis})));
  }
}

TEST_CASE("instanton potential") {
  const Connection b = build_instanton();
  CHECK(b.frame == Frame::EBar);
  for (int axis = 1; axis <= 4; ++axis) CHECK(b.potential.at(K0, DirSet{axis}) == Quaternion::zero());
  const QForm fa = instanton_generator(Variant::AntiInstanton);
  const QForm fi = instanton_generator(Variant::Instanton);
  for (const auto& k : kWindow.points()) {
    CHECK(fi.at(k, DirSet{}) == conj(fa.at(k, DirSet{})));
    const Quaternion f = fi.at(k, DirSet{});
    CHECK(b.potential.at(k, DirSet{1}) == imaginary_part(f));
    CHECK(b.potential.at(k, DirSet{2}) == imaginary_part(f * -I));
    CHECK(b.potential.at(k, DirSet{3}) == imaginary_part(f * -J));
    CHECK(b.potential.at(k, DirSet{4}) == imaginary_part(f * -K));
  }
  CHECK(std::string(to_string(Variant::Instanton)) == "instanton");
  CHECK(std::string(to_string(Variant::AntiInstanton)) == "anti-instanton");
}

TEST_CASE("weights") {
  CHECK(weight(K0, 1) == Rational(1, 2));
  CHECK(weight(MultiIndex{1, 0, 0, 0}, 1) == Rational(1, 10));
  CHECK(diagonal_weight(0) == Rational(1, 2));
  CHECK(diagonal_weight(1) == Rational(1, 40));
  for (std::int64_t mu = -5; mu <= 5; ++mu) {
    for (int axis = 1; axis <= 4; ++axis) CHECK(weight(diag(mu), axis) == diagonal_weight(mu));
  }
  CHECK_THROWS_AS(weight(K0, 0), std::out_of_range);
}

TEST_CASE("closed-form curvature at the origin") {
  const auto f = closed_form_curvature(Variant::AntiInstanton, K0);
  CHECK(f[0] == I);
  const auto d = diagonal_curvature(Variant::AntiInstanton, 0);
  CHECK(d[0] == I);
}

TEST_CASE("closed-form curvature matches the generic evaluation") {
  for (Variant v : {Variant::AntiInstanton, Variant::Instanton}) {
    const QForm generic = curvature(build(v));
    for (const auto& k : kWindow.points()) {
      const auto closed = closed_form_curvature(v, k);
      for (std::size_t n = 0; n < 6; ++n) {
        const auto ax = oracle::pairs()[n].axes();
        CHECK(closed[n] == oracle::curvature_component(build(v).potential, k, ax[0], ax[1]));
        CHECK(closed[n] == generic.at(k, oracle::pairs()[n]));
      }
    }
  }
}

TEST_CASE("anti-instanton curvature is su(2)-valued exactly on the diagonal") {
  const QForm f = curvature(build_anti_instanton());
  const Su2Residuals res = su2_residuals(f, kWindow);
  for (const auto& k : kWindow.points()) {
    bool all_zero = true;
    for (std::size_t n = 0; n < 6; ++n) {
      const auto ax = oracle::pairs()[n].axes();
      const Rational r = res.at(Cell{k, oracle::pairs()[n]});
      CHECK(r == closed_form_real_part(k, ax[0], ax[1]));
      if (!r.is_zero()) all_zero = false;
    }
    CHECK(all_zero == k.is_diagonal());
  }
  const auto at100 = su2_residuals(f, Box{{1, 0, 0, 0}, {1, 0, 0, 0}});
  bool nonzero = false;
  for (const auto& [cell, r] : at100) nonzero = nonzero || !r.is_zero();
  CHECK(nonzero);
}

TEST_CASE("diagonal curvature") {
  for (Variant v : {Variant::AntiInstanton, Variant::Instanton}) {
    for (const auto& q : diagonal_curvature(v, 1)) CHECK(q.is_zero());
  }
  const auto a0 = diagonal_curvature(Variant::AntiInstanton, 0);
  CHECK(a0[0] == I);
  CHECK(a0[5] == -I);
  CHECK(a0[1] == J);
  CHECK(a0[4] == J);
  CHECK(a0[2] == K);
  CHECK(a0[3] == -K);
  const auto i0 = diagonal_curvature(Variant::Instanton, 0);
  CHECK(i0[0] == -I);
  CHECK(i0[5] == -I);
  for (Variant v : {Variant::AntiInstanton, Variant::Instanton}) {
    for (std::int64_t mu = -3; mu <= 3; ++mu) {
      CHECK(diagonal_curvature(v, mu) == closed_form_curvature(v, diag(mu)));
    }
  }
}

TEST_CASE("diagonal duality and factorization") {
  const Box box = Box::cube(-3, 3);
  const QForm anti = diagonal_curvature_form(Variant::AntiInstanton, -3, 3);
  const QForm inst = diagonal_curvature_form(Variant::Instanton, -3, 3);
  const DualityReport ra = duality_classify(anti, box);
  const DualityReport ri = duality_classify(inst, box);
  CHECK(ra.anti_self_dual());
  CHECK_FALSE(ra.self_dual());
  CHECK(ri.self_dual());
  CHECK_FALSE(ri.anti_self_dual());
  CHECK(compare_zero(anti_self_dual_residual(anti), box).equal());
  CHECK(compare_zero(self_dual_residual(inst), box).equal());
  CHECK(same(anti, omega_factorization(Variant::AntiInstanton), box));
  CHECK(same(inst, omega_factorization(Variant::Instanton), box));
  CHECK(anti.at(MultiIndex{1, 0, 0, 0}, DirSet{1, 2}) == Quaternion::zero());
}

TEST_CASE("omega form") {
  const QForm w = omega_form();
  CHECK(w.at(diag(1), DirSet{}) == Quaternion::zero());
  CHECK(w.at(diag(0), DirSet{}) == Quaternion::real(Rational(1, 2)));
  CHECK(w.at(MultiIndex{0, 1, 0, 0}, DirSet{}) == Quaternion::zero());
  const QForm ebe = cup(unit_frame(true), unit_frame());
  for (std::int64_t mu = -3; mu <= 3; ++mu) {
    const Rational coef = w.at(diag(mu), DirSet{}).re;
    const Quaternion pattern = ebe.at(diag(mu), DirSet{1, 2});
    CHECK(pattern == Quaternion{0, 2, 0, 0});
    CHECK(coef * pattern.im_i == diagonal_weight(mu) * Rational(2 - 2 * mu));
  }
}

TEST_CASE("anti-instanton approaches the pure gauge") {
  CHECK_THROWS_AS(shell_deviation(0), std::invalid_argument);
  const ShellDeviation d2 = shell_deviation(2);
  const ShellDeviation d4 = shell_deviation(4);
  CHECK(d2.points == shell(2).size());
  CHECK(d2.max_norm_sq > d4.max_norm_sq);
  CHECK(d4.max_norm_sq > Rational(0));
}

TEST_CASE("gauge behaviour at infinity") {
  const GaugeAtInfinityCheck g = gauge_at_infinity(Box::cube(1, 3));
  CHECK(g.passed());
  CHECK(g.components == 81 * 4);
  CHECK(g.worst == Rational(0));
  try {
    (void)gauge_at_infinity(Box::cube(-1, 1));
    FAIL("expected a singular gauge error");
  } catch (const SingularGaugeError& err) {
    CHECK(err.where() == K0);
  }
  CHECK_THROWS_AS(asymptotic_gauge_check(1, Box::cube(1, 2)), std::invalid_argument);
  const AsymptoticReport r = asymptotic_gauge_check(4, Box::cube(1, 2));
  CHECK(r.shells.size() == 3);
  CHECK(r.strictly_decreasing);
  CHECK(r.gauge.passed());
  CHECK(compare_zero(quaternionic_curvature(pure_gauge_connection()), Box::cube(1, 3)).equal());
}

TEST_CASE("Yang-Mills residuals of the instanton family at diagonal points") {
  // The Bianchi part vanishes everywhere. The dual part reads F at
  // off-diagonal neighbours, where F is not (anti-)self-dual, so it does not
  // vanish on the diagonal.
  for (Variant v : {Variant::AntiInstanton, Variant::Instanton}) {
    const YangMillsResiduals ym = ym_residuals(build(v).potential);
    CHECK(compare_zero(ym.bianchi, Box::cube(-2, 2)).equal());
    for (std::int64_t mu = -3; mu <= 3; ++mu) {
      CHECK_FALSE(ym.dual.at(diag(mu), DirSet{1, 2, 3}).is_zero());
    }
  }
  const YangMillsResiduals anti = ym_residuals(build_anti_instanton().potential);
  CHECK(anti.dual.at(K0, DirSet{1, 2, 3}) ==
        Quaternion{Rational(-1, 2), Rational(1, 10), Rational(-1, 10), Rational(-1, 10)});
}
