#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "fields.hpp"
#include "sdym/chain.hpp"
#include "sdym/gauge.hpp"
#include "sdym/random.hpp"
#include "sdym/solutions.hpp"

namespace sdym::cli {

using json = nlohmann::ordered_json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

json index_json(const MultiIndex& k) { return json::array({k[1], k[2], k[3], k[4]}); }

json cell_json(const Cell& c) {
  json j;
  j["k"] = index_json(c.index);
  j["dirs"] = c.dirs.to_string();
  j["doubled"] = c.doubled;
  return j;
}

json rational_json(const Rational& r) {
  json j;
  j["exact"] = r.to_string();
  j["decimal"] = r.to_decimal(17);
  return j;
}

void Tally::residual(const Rational& r, const json& where) {
  ++points_;
  if (r.is_zero()) return;
  ++failures_;
  if (r > worst_) worst_ = r;
  if (counterexamples_.size() < kMaxCounterexamples) {
    json c;
    c["where"] = where;
    c["residual"] = r.to_string();
    counterexamples_.push_back(std::move(c));
  }
}

template <typename C>
void Tally::compare(const FormComparison<C>& c, const std::string& label) {
  points_ += c.points;
  if (c.equal()) return;
  failures_ += c.mismatches;
  if (c.worst > worst_) worst_ = c.worst;
  if (counterexamples_.size() < kMaxCounterexamples) {
    json e;
    e["where"] = label;
    if (c.first_mismatch) e["cell"] = cell_json(*c.first_mismatch);
    e["mismatches"] = c.mismatches;
    e["residual"] = c.worst.to_string();
    counterexamples_.push_back(std::move(e));
  }
}

template void Tally::compare(const FormComparison<Quaternion>&, const std::string&);
template void Tally::compare(const FormComparison<Matrix2C>&, const std::string&);

void Tally::finish(CheckResult& r) const {
  r.points = points_;
  r.worst = worst_;
  r.counterexamples = counterexamples_;
  r.status = failures_ == 0 ? Status::Pass : Status::Fail;
}

bool CheckSpec::applies_to(Solution s) const {
  return solutions.empty() || std::find(solutions.begin(), solutions.end(), s) != solutions.end();
}

namespace {

const Box kRandomWindow = Box::cube(-2, 2);
const Box kFlatRegion = Box::cube(1, 4);
const Box kGaugeRegion = Box::cube(1, 3);

std::string label(const char* what, int index) { return std::string(what) + "#" + std::to_string(index); }

Rational star_sign(int r) { return Rational((r * (4 - r)) % 2 == 0 ? 1 : -1); }

// Diagonal points (mu, mu, mu, mu) of a box.
std::pair<std::int64_t, std::int64_t> diagonal_range(const Box& b) {
  std::int64_t lo = b.lo[1];
  std::int64_t hi = b.hi[1];
  for (int a = 2; a <= kDim; ++a) {
    lo = std::max(lo, b.lo[a]);
    hi = std::min(hi, b.hi[a]);
  }
  return {lo, hi};
}

Variant variant_of(Solution s) {
  return s == Solution::Instanton ? Variant::Instanton : Variant::AntiInstanton;
}

// -- algebra of the complex ----------------------------------------------

CheckResult star_involution(const RunConfig&) {
  CheckResult r;
  Tally t;
  const MultiIndex k{1, 2, 3, 4};
  for (unsigned bits = 0; bits < 16; ++bits) {
    const DirSet d(bits);
    const Rational sign = star_sign(d.size());
    for (bool doubled : {false, true}) {
      const Cell cell{k, d, doubled};
      const Chain c = Chain::of(cell, Rational(3, 2));
      const Chain diff = star(star(c)) - sign * c;
      Rational res;
      for (const auto& [x, coef] : diff.terms()) res += coef * coef;
      t.residual(res, cell_json(cell));

      const QForm phi = basis_form(cell, Quaternion{1, 2, -1, Rational(1, 3)});
      const auto cmp = compare(star(star(phi)), sign * phi, Box{k, k});
      t.residual(cmp.worst, cell_json(cell));
    }
  }
  r.region = Box{k, k};
  r.details["basis_types"] = 16;
  r.details["complexes"] = 2;
  t.finish(r);
  return r;
}

CheckResult coboundary_nilpotence(const RunConfig& cfg) {
  CheckResult r;
  Tally t;
  RationalSampler rng(derive_seed(cfg.seed, 10));
  constexpr int kSamples = 100;
  for (int p = 0; p <= 2; ++p) {
    for (int n = 0; n < kSamples; ++n) {
      const QForm phi = random_form(rng, p, kRandomWindow, n % 2 == 1);
      const QForm dd = coboundary(coboundary(phi));
      t.compare(compare_zero(dd, *dd.region()), label("degree", p) + "/" + std::to_string(n));
    }
  }
  r.region = kRandomWindow;
  r.details["samples_per_degree"] = kSamples;
  r.details["degrees"] = json::array({0, 1, 2});
  t.finish(r);
  return r;
}

CheckResult adjunction(const RunConfig& cfg) {
  CheckResult r;
  Tally t;
  RationalSampler rng(derive_seed(cfg.seed, 11));
  constexpr int kSamples = 100;
  for (int p = 0; p <= 3; ++p) {
    const auto& dirs = subsets_of_size(p + 1);
    for (int n = 0; n < kSamples; ++n) {
      const QForm phi = random_form(rng, p, kRandomWindow);
      const QForm dphi = coboundary(phi);
      for (const auto& k : dphi.region()->points()) {
        for (DirSet d : dirs) {
          const Cell cell{k, d, false};
          const Quaternion lhs = pair(boundary(Chain::of(cell)), phi);
          const Quaternion rhs = pair(Chain::of(cell), dphi);
          t.residual(norm_sq(lhs - rhs), cell_json(cell));
        }
      }
    }
  }
  r.region = kRandomWindow;
  r.details["samples_per_degree"] = kSamples;
  r.details["degrees"] = json::array({0, 1, 2, 3});
  t.finish(r);
  return r;
}

CheckResult leibniz(const RunConfig& cfg) {
  CheckResult r;
  Tally t;
  RationalSampler rng(derive_seed(cfg.seed, 12));
  constexpr int kSamples = 50;
  json combos = json::array();
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; p + q <= 3; ++q) {
      combos.push_back(json::array({p, q}));
      for (int n = 0; n < kSamples; ++n) {
        const QForm phi = random_form(rng, p, kRandomWindow);
        const QForm psi = random_form(rng, q, kRandomWindow);
        const QForm lhs = coboundary(cup(phi, psi));
        const QForm dpsi = cup(phi, coboundary(psi));
        const QForm rhs = cup(coboundary(phi), psi) + (p % 2 == 0 ? dpsi : -dpsi);
        t.compare(compare(lhs, rhs, *lhs.region()),
                  "p=" + std::to_string(p) + ",q=" + std::to_string(q) + "/" + std::to_string(n));
      }
    }
  }
  r.region = kRandomWindow;
  r.details["samples_per_pair"] = kSamples;
  r.details["degree_pairs"] = combos;
  t.finish(r);
  return r;
}

CheckResult iota_identities(const RunConfig& cfg) {
  CheckResult r;
  Tally t;
  RationalSampler rng(derive_seed(cfg.seed, 13));
  constexpr int kSamples = 20;
  const Box inner = kRandomWindow.shrink_upper();
  for (int p = 0; p <= 4; ++p) {
    for (int n = 0; n < kSamples; ++n) {
      const std::string tag = label("degree", p) + "/" + std::to_string(n);
      const QForm phi = random_form(rng, p, kRandomWindow);
      t.compare(compare(iota(iota(phi)), phi, kRandomWindow), "iota^2 " + tag);
      t.compare(compare(iota(star(phi)), star(iota(phi)), kRandomWindow), "iota* " + tag);
      if (p < 4) t.compare(compare(iota(coboundary(phi)), coboundary(iota(phi)), inner), "iota d " + tag);
      const int q = static_cast<int>(rng.integer(0, 4 - p));
      const QForm psi = random_form(rng, q, kRandomWindow);
      t.compare(compare(iota(cup(phi, psi)), cup(iota(phi), iota(psi)), inner), "iota cup " + tag);
      const QForm h = random_form(rng, 0, kRandomWindow);
      t.compare(compare(iota(star(cup(h, phi))), cup(h, iota(star(phi))), kRandomWindow),
                "0-form " + tag);
    }
  }
  r.region = kRandomWindow;
  r.details["samples_per_degree"] = kSamples;
  t.finish(r);
  return r;
}

// -- gauge theory -----------------------------------------------------------

void bianchi_on(Tally& t, const QForm& a, const Box& region, const std::string& tag) {
  const QForm f = curvature(a);
  const QForm lhs = coboundary(f) + cup(a, f) - cup(f, a);
  t.compare(compare_zero(lhs, region), tag);
}

CheckResult bianchi(const RunConfig& cfg) {
  CheckResult r;
  Tally t;
  if (cfg.solution == Solution::Random) {
    RationalSampler rng(derive_seed(cfg.seed, 14));
    constexpr int kSamples = 25;
    // F reads A at k + tau_i and d^c F reads F at k + tau_i, so two extra layers.
    const Box sampled = kRandomWindow.grow_upper(DirSet::full(), 2);
    for (int n = 0; n < kSamples; ++n) {
      bianchi_on(t, random_su2_connection(rng, sampled), kRandomWindow, label("connection", n));
    }
    r.region = kRandomWindow;
    r.details["connections"] = kSamples;
    r.details["sampled_on"] = to_json(sampled);
  } else {
    const Field field = make_field(cfg.solution, cfg.seed, cfg.window, 3);
    bianchi_on(t, field.potential, cfg.window, to_string(cfg.solution));
    r.region = cfg.window;
  }
  t.finish(r);
  return r;
}

CheckResult flatness(const RunConfig&) {
  CheckResult r;
  Tally t;
  const Connection pg = pure_gauge_connection();
  t.compare(compare_zero(quaternionic_curvature(pg), kFlatRegion), "Im{d f cup e + (f cup e)^2}");
  t.compare(compare_zero(curvature(pg.unprojected()), kFlatRegion), "unprojected curvature");
  // Reported for information: the componentwise curvature of the projected
  // potential is not part of the identity and does not vanish.
  r.details["projected_componentwise_nonzero"] =
      compare_zero(curvature(pg.potential), kFlatRegion).mismatches;
  r.region = kFlatRegion;
  t.finish(r);
  return r;
}

CheckResult duality_unit(const RunConfig& cfg) {
  CheckResult r;
  Tally t;
  const Box region = kRandomWindow.shrink_upper();
  const QForm e = unit_frame();
  const QForm eb = unit_frame(true);
  const QForm eeb = cup(e, eb);
  const QForm ebe = cup(eb, e);
  t.compare(compare(eeb, star(iota(eeb)), region), "e cup e-bar");
  t.compare(compare(ebe, -star(iota(ebe)), region), "e-bar cup e");
  RationalSampler rng(derive_seed(cfg.seed, 15));
  constexpr int kSamples = 20;
  for (int n = 0; n < kSamples; ++n) {
    const QForm h = random_form(rng, 0, kRandomWindow);
    t.compare(compare_zero(self_dual_residual(cup(h, eeb)), region), label("h cup e cup e-bar", n));
    t.compare(compare_zero(anti_self_dual_residual(cup(h, ebe)), region), label("h cup e-bar cup e", n));
    t.compare(compare_zero(self_dual_residual(cup(cup(h, e), eb)), region), label("(h cup e) cup e-bar", n));
  }
  r.region = region;
  r.details["zero_forms"] = kSamples;
  t.finish(r);
  return r;
}

// -- explicit solutions --------------------------------------------------------

CheckResult closed_form_oracle(const RunConfig& cfg) {
  CheckResult r;
  Tally t;
  const auto& ps = subsets_of_size(2);
  for (Variant v : {Variant::AntiInstanton, Variant::Instanton}) {
    const QForm generic = curvature(build(v));
    for (const auto& k : cfg.window.points()) {
      const auto closed = closed_form_curvature(v, k);
      for (std::size_t n = 0; n < ps.size(); ++n) {
        json where = cell_json(Cell{k, ps[n], false});
        where["variant"] = to_string(v);
        t.residual(norm_sq(closed[n] - generic.at(k, ps[n])), where);
      }
    }
  }
  r.region = cfg.window;
  r.details["variants"] = json::array({"anti-instanton", "instanton"});
  r.details["lattice_points"] = cfg.window.size();
  t.finish(r);
  return r;
}

CheckResult su2_diagonal(const RunConfig& cfg) {
  CheckResult r;
  const Variant v = variant_of(cfg.solution);
  const Su2Residuals res = su2_residuals(curvature(build(v)), cfg.window);
  json diag_ce = json::array();
  json off_ce = json::array();
  std::size_t diag_points = 0;
  std::size_t off_points = 0;
  std::size_t off_nonzero = 0;
  Rational worst;
  json violations = json::array();
  std::size_t violation_count = 0;
  for (const auto& k : cfg.window.points()) {
    Rational point_max;
    for (DirSet d : subsets_of_size(2)) {
      const Rational a = res.at(Cell{k, d, false}).abs();
      if (a > point_max) point_max = a;
    }
    if (k.is_diagonal()) {
      ++diag_points;
      if (point_max > worst) worst = point_max;
      if (!point_max.is_zero()) {
        ++violation_count;
        if (diag_ce.size() < Tally::kMaxCounterexamples) diag_ce.push_back(index_json(k));
      }
    } else {
      ++off_points;
      if (!point_max.is_zero()) {
        ++off_nonzero;
        if (off_ce.size() < Tally::kMaxCounterexamples) off_ce.push_back(index_json(k));
      } else {
        ++violation_count;
        if (violations.size() < Tally::kMaxCounterexamples) violations.push_back(index_json(k));
      }
    }
  }
  for (const auto& k : diag_ce) violations.push_back(k);
  r.region = cfg.window;
  r.points = cfg.window.size();
  r.worst = worst;
  r.status = violation_count == 0 ? Status::Pass : Status::Fail;
  r.counterexamples = violations;
  r.details["variant"] = to_string(v);
  r.details["diagonal_points"] = diag_points;
  r.details["off_diagonal_points"] = off_points;
  r.details["off_diagonal_nonzero"] = off_nonzero;
  r.details["diagonal_counterexamples"] = diag_ce;
  r.details["off_diagonal_counterexamples"] = off_ce;
  return r;
}

CheckResult diagonal_duality(const RunConfig& cfg) {
  CheckResult r;
  Tally t;
  const auto [lo, hi] = diagonal_range(cfg.window);
  for (Variant v : {Variant::AntiInstanton, Variant::Instanton}) {
    const QForm diag = diagonal_curvature_form(v, lo, hi);
    const QForm factor = omega_factorization(v);
    const QForm generic = curvature(build(v));
    for (std::int64_t mu = lo; mu <= hi; ++mu) {
      const MultiIndex k{mu, mu, mu, mu};
      const Box at{k, k};
      const std::string tag = std::string(to_string(v)) + " mu=" + std::to_string(mu);
      const DualityReport rep = duality_classify(diag, at);
      if (v == Variant::AntiInstanton) {
        t.compare(compare_zero(anti_self_dual_residual(diag), at), tag + " F + iota*F");
        t.residual(rep.worst_anti_self_dual, tag + " componentwise");
      } else {
        t.compare(compare_zero(self_dual_residual(diag), at), tag + " F - iota*F");
        t.residual(rep.worst_self_dual, tag + " componentwise");
      }
      t.compare(compare(diag, factor, at), tag + " omega factorization");
      t.compare(compare(diag, generic, at), tag + " generic curvature");
    }
  }
  r.region = Box{{lo, lo, lo, lo}, {hi, hi, hi, hi}};
  r.details["mu_min"] = lo;
  r.details["mu_max"] = hi;
  t.finish(r);
  return r;
}

CheckResult m_mu(const RunConfig&) {
  CheckResult r;
  Tally t;
  constexpr std::int64_t kMu = 5;
  for (std::int64_t mu = -kMu; mu <= kMu; ++mu) {
    const MultiIndex k{mu, mu, mu, mu};
    for (int axis = 1; axis <= kDim; ++axis) {
      json where;
      where["mu"] = mu;
      where["axis"] = axis;
      t.residual((weight(k, axis) - diagonal_weight(mu)).abs(), where);
    }
  }
  r.region = Box::cube(-kMu, kMu);
  r.details["mu_min"] = -kMu;
  r.details["mu_max"] = kMu;
  r.details["diagonal_only"] = true;
  t.finish(r);
  return r;
}

CheckResult gauge_infinity(const RunConfig&) {
  CheckResult r;
  const GaugeAtInfinityCheck g = gauge_at_infinity(kGaugeRegion);
  r.region = kGaugeRegion;
  r.points = g.components;
  r.worst = g.worst;
  r.status = g.passed() ? Status::Pass : Status::Fail;
  r.details["mismatches"] = g.mismatches;
  r.details["gauge"] = "x^{-1}";
  return r;
}

CheckResult asymptotic_decay(const RunConfig&) {
  CheckResult r;
  constexpr std::int64_t kMaxRadius = 4;
  json shells = json::array();
  bool decreasing = true;
  std::optional<Rational> previous;
  for (std::int64_t radius = 2; radius <= kMaxRadius; ++radius) {
    const ShellDeviation d = shell_deviation(radius);
    json s;
    s["radius"] = radius;
    s["points"] = d.points;
    s["max_norm_sq"] = rational_json(d.max_norm_sq);
    shells.push_back(std::move(s));
    r.points += d.points;
    if (previous && !(d.max_norm_sq < *previous)) decreasing = false;
    if (d.max_norm_sq > r.worst) r.worst = d.max_norm_sq;
    previous = d.max_norm_sq;
  }
  r.region = Box::cube(-kMaxRadius, kMaxRadius);
  r.status = decreasing ? Status::Pass : Status::Fail;
  r.details["shells"] = shells;
  r.details["strictly_decreasing"] = decreasing;
  return r;
}

// Anchors are the identities themselves.
std::vector<CheckSpec> build_registry() {
  const std::vector<Solution> analytic{Solution::AntiInstanton, Solution::Instanton};
  std::vector<CheckSpec> specs{
      {"star-involution", "** c_r = (-1)^{r(4-r)} c_r", {}, star_involution},
      {"coboundary-nilpotence", "d^c d^c phi = 0", {}, coboundary_nilpotence},
      {"adjunction", "<d eps, phi> = <eps, d^c phi>", {}, adjunction},
      {"leibniz", "d^c(phi cup psi) = d^c phi cup psi + (-1)^p phi cup d^c psi", {}, leibniz},
      {"iota",
       "iota^2 = Id, iota* = *iota, iota d^c = d^c iota, iota(phi cup psi) = iota phi cup iota psi, "
       "iota*(h cup phi) = h cup iota*phi",
       {},
       iota_identities},
      {"bianchi", "d^c F + A cup F - F cup A = 0", {}, bianchi},
      {"flatness", "A = Im(x^{-1} cup d^c x) => F = 0", {}, flatness},
      {"duality-unit", "e cup e-bar = *iota(e cup e-bar), e-bar cup e = -*iota(e-bar cup e)", {},
       duality_unit},
      {"closed-form-oracle", "closed-form F_k^{ij} = D_i A_k^j - D_j A_k^i + A_k^i A_{tau_i k}^j - A_k^j A_{tau_j k}^i",
       {}, closed_form_oracle},
      {"su2-diagonal", "Re F_k^{ij} = 0 for all i<j iff k1 = k2 = k3 = k4", analytic, su2_diagonal},
      {"diagonal-duality",
       "F = omega cup e-bar cup e = -iota*F (anti-instanton), F = omega cup e cup e-bar = iota*F (instanton)",
       {}, diagonal_duality},
      {"m-mu", "M_i(mu,mu,mu,mu) = 1/(2(1+4mu^2)(1+mu+2mu^2))", {}, m_mu},
      {"gauge-infinity",
       "g = x^{-1}: g^{-1} cup (f cup e) cup g + g^{-1} cup d^c g -> Im((sum conj(y)/(1+|y|^2) x^k) cup d^c y)",
       {Solution::AntiInstanton}, gauge_infinity},
      {"asymptotic-decay", "max_shell |Im(f cup e) - Im(x^{-1} cup d^c x)|^2 strictly decreasing",
       {Solution::AntiInstanton}, asymptotic_decay},
  };
  std::sort(specs.begin(), specs.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.name < b.name; });
  return specs;
}

}  // namespace

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = build_registry();
  return specs;
}

const CheckSpec* find_check(const std::string& name) {
  for (const auto& s : registry()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

CheckResult run_check(const CheckSpec& spec, const RunConfig& config) {
  CheckResult r;
  if (!spec.applies_to(config.solution)) {
    r.status = Status::Skipped;
    r.details["reason"] = "does not apply to solution " + to_string(config.solution);
  } else {
    const auto start = std::chrono::steady_clock::now();
    r = spec.run(config);
    const auto stop = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  }
  r.name = spec.name;
  r.anchor = spec.anchor;
  return r;
}

std::vector<const CheckSpec*> select_checks(const RunConfig& config) {
  std::vector<const CheckSpec*> out;
  if (config.all) {
    for (const auto& s : registry()) out.push_back(&s);
    return out;
  }
  std::set<std::string> names(config.checks.begin(), config.checks.end());
  if (names.empty()) throw ConfigError(ExitCode::Usage, "no checks selected: use --check NAME or --all");
  for (const auto& n : names) {
    const CheckSpec* s = find_check(n);
    if (s == nullptr) throw ConfigError(ExitCode::UnknownCheck, "unknown check '" + n + "'");
    if (!s->applies_to(config.solution)) {
      throw ConfigError(ExitCode::Usage,
                        "check '" + n + "' does not apply to solution " + to_string(config.solution));
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace sdym::cli
