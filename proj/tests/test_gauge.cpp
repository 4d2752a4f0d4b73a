#include "doctest.h"

#include "oracles.hpp"
#include "sdym/errors.hpp"
#include "sdym/random.hpp"
#include "sdym/solutions.hpp"

using namespace sdym;

namespace {

const MultiIndex K0{0, 0, 0, 0};
const MultiIndex K1111{1, 1, 1, 1};
const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();
const Box kWindow = Box::cube(-2, 2);

bool same(const QForm& a, const QForm& b, const Box& region) { return compare(a, b, region).equal(); }
bool vanishes(const QForm& a, const Box& region) { return compare_zero(a, region).equal(); }

bool all_zero(const Su2Residuals& r) {
  for (const auto& [cell, value] : r) {
    if (!value.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("curvature of trivial and constant potentials") {
  const Box box = Box::cube(-1, 1);
  CHECK(vanishes(curvature(QForm::zero(1)), box));
  const std::array<Quaternion, 4> a{I, J + K, Quaternion{0, 2, 0, -1}, K};
  const QForm constant = QForm::from_rule(1, [a](const MultiIndex&, DirSet d) {
    return a[static_cast<std::size_t>(d.axes()[0] - 1)];
  });
  const QForm f = curvature(constant);
  for (DirSet d : subsets_of_size(2)) {
    const auto ax = d.axes();
    const Quaternion& ai = a[static_cast<std::size_t>(ax[0] - 1)];
    const Quaternion& aj = a[static_cast<std::size_t>(ax[1] - 1)];
    CHECK(f.at(K1111, d) == ai * aj - aj * ai);
  }
  CHECK_THROWS_AS(curvature(QForm::zero(2)), DegreeError);
}

TEST_CASE("curvature agrees with the componentwise formula") {
  RationalSampler rng(21);
  for (int n = 0; n < 3; ++n) {
    const QForm a = random_form(rng, 1, kWindow);
    const QForm f = curvature(a);
    REQUIRE(f.region().has_value());
    CHECK(*f.region() == Box::cube(-2, 1));
    for (const auto& k : f.region()->points()) {
      for (DirSet d : subsets_of_size(2)) {
        const auto ax = d.axes();
        CHECK(f.at(k, d) == oracle::curvature_component(a, k, ax[0], ax[1]));
      }
    }
  }
}

TEST_CASE("connection components built from a generator") {
  RationalSampler rng(22);
  const QForm f = random_form(rng, 0, kWindow);
  const Connection c = Connection::from_generator(f);
  for (const auto& k : Box::cube(-2, 1).points()) {
    const auto v = f.at(k, DirSet{}).components();
    const Quaternion fq = f.at(k, DirSet{});
    CHECK(c.potential.at(k, DirSet{1}) == Quaternion{0, v[1], v[2], v[3]});
    CHECK(c.potential.at(k, DirSet{2}) == imaginary_part(fq * I));
    CHECK(c.potential.at(k, DirSet{3}) == imaginary_part(fq * J));
    CHECK(c.potential.at(k, DirSet{4}) == imaginary_part(fq * K));
  }
  CHECK_THROWS_AS(Connection::from_generator(QForm::zero(1)), DegreeError);
  CHECK_THROWS_AS(Connection::from_potential(QForm::zero(0)), DegreeError);
  CHECK_THROWS_AS((void)Connection::from_potential(QForm::zero(1)).unprojected(), std::logic_error);
}

TEST_CASE("pure gauge connection is flat in quaternionic form") {
  const Box box = Box::cube(1, 4);
  const Connection pg = pure_gauge_connection();
  CHECK(vanishes(quaternionic_curvature(pg), box));
  CHECK(vanishes(curvature(pg.unprojected()), box));
  // The componentwise curvature of the projected potential does not vanish:
  // projecting onto su(2) before squaring loses the real parts that cancel.
  const QForm projected = curvature(pg.potential);
  CHECK(projected.at(K1111, DirSet{1, 2}) == Quaternion{0, Rational(-1, 14), 0, 0});
  CHECK_FALSE(vanishes(projected, box));
}

TEST_CASE("quaternionic curvature is the imaginary part of the unprojected curvature") {
  RationalSampler rng(23);
  const QForm f = random_form(rng, 0, kWindow);
  for (Frame frame : {Frame::E, Frame::EBar}) {
    const Connection c = Connection::from_generator(f, frame);
    const QForm lhs = quaternionic_curvature(c);
    CHECK(same(lhs, imaginary_part(curvature(c.unprojected())), *lhs.region()));
  }
}

TEST_CASE("covariant differential") {
  RationalSampler rng(24);
  const QForm omega = random_form(rng, 2, kWindow);
  const Box box = Box::cube(-2, 1);
  CHECK(same(covariant_differential(QForm::zero(1), omega), coboundary(omega), box));
  const QForm a = random_su2_connection(rng, kWindow);
  const QForm h = random_form(rng, 0, kWindow);
  CHECK(same(covariant_differential(a, h), coboundary(h) + cup(a, h) - cup(h, a), box));
  const QForm b = random_form(rng, 1, kWindow);
  CHECK(same(covariant_differential(a, b), coboundary(b) + cup(a, b) + cup(b, a), box));
  CHECK_THROWS_AS(covariant_differential(a, QForm::zero(4)), DegreeError);
  CHECK_THROWS_AS(covariant_differential(QForm::zero(2), h), DegreeError);
}

TEST_CASE("Bianchi identity on random su(2) connections") {
  RationalSampler rng(25);
  for (int n = 0; n < 5; ++n) {
    const QForm a = random_su2_connection(rng, kWindow);
    const QForm f = curvature(a);
    const QForm lhs = coboundary(f) + cup(a, f) - cup(f, a);
    CHECK(vanishes(lhs, *lhs.region()));
    const YangMillsResiduals ym = ym_residuals(a);
    CHECK(vanishes(ym.bianchi, *ym.bianchi.region()));
  }
}

TEST_CASE("Yang-Mills residuals of trivial and flat potentials") {
  const YangMillsResiduals zero = ym_residuals(QForm::zero(1));
  CHECK(vanishes(zero.bianchi, Box::cube(-1, 1)));
  CHECK(vanishes(zero.dual, Box::cube(-1, 1)));
  const Box box = Box::cube(1, 3);
  const YangMillsResiduals flat = ym_residuals(pure_gauge_connection().unprojected());
  CHECK(vanishes(flat.bianchi, box));
  CHECK(vanishes(flat.dual, box));
}

TEST_CASE("curvature of an su(2) potential can leave su(2)") {
  RationalSampler rng(26);
  bool witnessed = false;
  for (int n = 0; n < 5 && !witnessed; ++n) {
    const QForm a = random_su2_connection(rng, Box::cube(0, 2));
    witnessed = !all_zero(su2_residuals(curvature(a), Box::cube(0, 1)));
  }
  CHECK(witnessed);
}

TEST_CASE("real parts of the curvature match the generator conditions") {
  RationalSampler rng(27);
  const QForm f = random_form(rng, 0, kWindow);
  const QForm curv = curvature(Connection::from_generator(f));
  const Box box = Box::cube(-2, 0);
  const Su2Residuals res = su2_residuals(curv, box);
  for (const auto& k : box.points()) {
    const auto cond = su2_conditions(f, k);
    for (std::size_t n = 0; n < 6; ++n) {
      CHECK(res.at(Cell{k, oracle::pairs()[n]}) == cond[n]);
    }
  }
}

TEST_CASE("constant real generator gives su(2)-valued curvature") {
  const QForm f = constant_form(0, Quaternion::real(Rational(3, 2)));
  CHECK(all_zero(su2_residuals(curvature(Connection::from_generator(f)), Box::cube(-1, 1))));
  CHECK_THROWS_AS(su2_residuals(QForm::zero(1), Box::cube(0, 0)), DegreeError);
}

TEST_CASE("unit gauge validation") {
  CHECK_THROWS_AS(GaugeTransform::constant(Quaternion{1, 1, 0, 0}), DomainError);
  CHECK_THROWS_AS(GaugeTransform::checked(coordinate_form(), Box::cube(1, 2)), DomainError);
  const Quaternion g{Rational(3, 5), 0, Rational(4, 5), 0};
  CHECK(GaugeTransform::constant(g).inverse().at(K0, DirSet{}) == conj(g));
}

TEST_CASE("identity gauge leaves the potential unchanged") {
  RationalSampler rng(28);
  const QForm a = random_su2_connection(rng, kWindow);
  const Box box = Box::cube(-2, 1);
  CHECK(same(gauge_transform(a, GaugeTransform::constant(Quaternion::one())), a, box));
  CHECK(same(gauge_transform(a, unit_form<Quaternion>(), box), a, box));
}

TEST_CASE("gauge transform of the zero potential is pure gauge") {
  RationalSampler rng(29);
  const Box box = Box::cube(-1, 1);
  const QForm g = random_unit_gauge(rng, Box::cube(-1, 2));
  const GaugeTransform gt = GaugeTransform::checked(g, Box::cube(-1, 2));
  CHECK(same(gauge_transform(QForm::zero(1), gt), cup(gt.inverse(), coboundary(g)), box));
}

TEST_CASE("curvature is covariant under constant gauges") {
  RationalSampler rng(30);
  for (int n = 0; n < 4; ++n) {
    const QForm a = random_su2_connection(rng, kWindow);
    const GaugeTransform g = GaugeTransform::constant(rng.unit_quaternion());
    const QForm lhs = curvature(gauge_transform(a, g));
    const QForm rhs = cup(cup(g.inverse(), curvature(a)), g.form());
    CHECK(same(lhs, rhs, *lhs.region()));
    const QForm ga = gauge_transform(a, g);
    for (const auto& k : ga.region()->points()) {
      for (DirSet d : subsets_of_size(1)) CHECK(is_su2_valued(ga.at(k, d)));
    }
  }
}

TEST_CASE("non-constant unit gauges do not preserve su(2) in general") {
  RationalSampler rng(31);
  const Box region = Box::cube(0, 1);
  bool counterexample = false;
  for (int n = 0; n < 5 && !counterexample; ++n) {
    const QForm a = random_su2_connection(rng, region.grow_upper());
    const QForm g = random_unit_gauge(rng, region.grow_upper());
    const QForm ga = gauge_transform(a, g, region);
    for (const auto& k : region.points()) {
      for (DirSet d : subsets_of_size(1)) {
        if (!is_su2_valued(ga.at(k, d))) counterexample = true;
      }
    }
  }
  CHECK(counterexample);
}

TEST_CASE("singular gauges are rejected with the offending index") {
  const QForm x = coordinate_form();
  try {
    (void)gauge_transform(QForm::zero(1), inverse(x), Box::cube(0, 1));
    FAIL("expected a singular gauge error");
  } catch (const SingularGaugeError& err) {
    CHECK(err.where() == K0);
  }
  try {
    (void)gauge_transform(QForm::zero(1), x, Box::cube(-1, 1));
    FAIL("expected a singular gauge error");
  } catch (const SingularGaugeError& err) {
    CHECK(err.where() == K0);
  }
}

TEST_CASE("general gauges take the imaginary part") {
  const QForm x = coordinate_form();
  const Box box = Box::cube(1, 2);
  const QForm a = build_anti_instanton().potential;
  const QForm ga = gauge_transform(a, inverse(x), box);
  const QForm xg = x.materialize(box.grow_upper());
  const QForm expected = imaginary_part(cup(cup(xg, a), inverse(xg)) + cup(xg, coboundary(inverse(xg))));
  CHECK(same(ga, expected, box));
}

TEST_CASE("unit 2-forms are dual") {
  const Box box = Box::cube(-1, 1);
  const QForm e = unit_frame();
  const QForm eb = unit_frame(true);
  const QForm eeb = cup(e, eb);
  const QForm ebe = cup(eb, e);
  CHECK(same(eeb, star(iota(eeb)), box));
  CHECK(same(ebe, -star(iota(ebe)), box));
  CHECK(duality_classify(eeb, box).classification == Duality::SelfDual);
  CHECK(duality_classify(ebe, box).classification == Duality::AntiSelfDual);
  RationalSampler rng(32);
  for (int n = 0; n < 4; ++n) {
    const QForm h = random_form(rng, 0, Box::cube(-1, 3));
    CHECK(duality_classify(cup(h, eeb), box).self_dual());
    CHECK(duality_classify(cup(cup(h, e), eb), box).self_dual());
    CHECK(duality_classify(cup(cup(h, eb), e), box).anti_self_dual());
    CHECK(vanishes(self_dual_residual(cup(h, eeb)), box));
    CHECK(vanishes(anti_self_dual_residual(cup(h, ebe)), box));
  }
}

TEST_CASE("componentwise duality criteria agree with the star") {
  RationalSampler rng(33);
  const Box box = Box::cube(-1, 1);
  const QForm f = random_form(rng, 2, kWindow);
  const QForm dual = iota(star(f));
  const DualityReport report = duality_classify(f, box);
  CHECK(report.classification == Duality::Neither);
  for (const auto& entry : report.entries) {
    const auto c = components_at(f, entry.k);
    const auto s = components_at(dual, entry.k);
    // self_dual[n] and anti_self_dual[n] are the 12, 13, 14 components of
    // F - iota*F and F + iota*F.
    for (std::size_t n = 0; n < 3; ++n) {
      CHECK(entry.self_dual[n] == c[n] - s[n]);
      CHECK(entry.anti_self_dual[n] == c[n] + s[n]);
    }
  }
  const DualityReport flat = duality_classify(QForm::zero(2), box);
  CHECK(flat.classification == Duality::Flat);
  CHECK(flat.self_dual());
  CHECK(flat.anti_self_dual());
  CHECK(std::string(to_string(Duality::AntiSelfDual)) == "anti-self-dual");
}
