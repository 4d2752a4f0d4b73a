#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "checks.hpp"
#include "fields.hpp"
#include "sdym/errors.hpp"
#include "sdym/random.hpp"
#include "sdym/sdym.hpp"

namespace sdym::cli {

using json = nlohmann::ordered_json;

namespace {

json quaternion_json(const Quaternion& q) {
  json j = json::array();
  for (const auto& c : q.components()) j.push_back(c.to_string());
  return j;
}

void csv_quaternion(std::ostream& os, const Quaternion& q) {
  for (const auto& c : q.components()) os << ',' << c.to_string();
}

void csv_blank(std::ostream& os) { os << ",,,,"; }

std::string render(const json& j) { return j.dump(2) + "\n"; }

json header(const RunConfig& config) {
  json j;
  j["tool_version"] = std::string(kVersion);
  j["config"] = to_json(config);
  return j;
}

json check_json(const CheckResult& r, bool timing) {
  json j;
  j["name"] = r.name;
  j["anchor"] = r.anchor;
  j["region"] = r.region ? to_json(*r.region) : json();
  j["status"] = to_string(r.status);
  j["passed"] = r.passed();
  j["points_checked"] = r.points;
  j["worst_residual"] = rational_json(r.worst);
  j["details"] = r.details;
  j["counterexamples"] = r.counterexamples;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

// Curvature of the selected field: the su(2)-valued quaternionic form for
// the pure gauge, the componentwise one otherwise.
QForm field_curvature(const RunConfig& config, const Field& field) {
  if (config.solution == Solution::Flat) return quaternionic_curvature(*field.connection);
  return curvature(field.potential);
}

std::optional<CurvatureComponents> closed_form(Solution s, const MultiIndex& k) {
  switch (s) {
    case Solution::AntiInstanton: return closed_form_curvature(Variant::AntiInstanton, k);
    case Solution::Instanton: return closed_form_curvature(Variant::Instanton, k);
    case Solution::Flat:
    case Solution::PureGauge: return CurvatureComponents{};
    case Solution::Random: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

CommandOutput cmd_verify(const RunConfig& config) {
  const auto specs = select_checks(config);
  std::vector<CheckResult> results;
  results.reserve(specs.size());
  for (const CheckSpec* s : specs) results.push_back(run_check(*s, config));

  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  CommandOutput out;
  out.code = ok ? ExitCode::Ok : ExitCode::CheckFailed;

  if (config.format == Format::Json) {
    json j = header(config);
    j["checks"] = json::array();
    for (const auto& r : results) j["checks"].push_back(check_json(r, config.timing));
    j["passed"] = ok;
    out.text = render(j);
  } else {
    std::ostringstream os;
    os << "name,status,points_checked,worst_exact,worst_decimal,region_kmin,region_kmax";
    if (config.timing) os << ",elapsed_ms";
    os << '\n';
    for (const auto& r : results) {
      os << r.name << ',' << to_string(r.status) << ',' << r.points << ',' << r.worst.to_string()
         << ',' << r.worst.to_decimal(17) << ',';
      if (r.region) os << r.region->lo.to_string() << ',' << r.region->hi.to_string();
      else os << ',';
      if (config.timing) os << ',' << r.elapsed_ms;
      os << '\n';
    }
    std::string text = os.str();
    // MultiIndex renders with commas; quote those cells.
    std::string quoted;
    bool in_index = false;
    for (char c : text) {
      if (c == '(') { quoted += "\"("; in_index = true; continue; }
      if (c == ')' && in_index) { quoted += ")\""; in_index = false; continue; }
      quoted += c;
    }
    out.text = quoted;
  }
  return out;
}

CommandOutput cmd_curvature(const RunConfig& config) {
  const Box region = config.point ? Box{*config.point, *config.point} : config.window;
  const Field field = make_field(config.solution, config.seed, region, 2);
  const QForm f = field_curvature(config, field);
  const auto& ps = subsets_of_size(2);

  std::size_t mismatches = 0;
  std::size_t rows = 0;
  json jrows = json::array();
  std::ostringstream csv;
  csv << "k1,k2,k3,k4,pair,generic_re,generic_i,generic_j,generic_k,closed_re,closed_i,closed_j,"
         "closed_k,diff_re,diff_i,diff_j,diff_k\n";
  for (const auto& k : region.points()) {
    const auto closed = closed_form(config.solution, k);
    for (std::size_t n = 0; n < ps.size(); ++n) {
      const Quaternion g = f.at(k, ps[n]);
      ++rows;
      if (config.format == Format::Json) {
        json row;
        row["k"] = index_json(k);
        row["pair"] = ps[n].to_string();
        row["generic"] = quaternion_json(g);
        row["closed"] = closed ? quaternion_json((*closed)[n]) : json();
        row["difference"] = closed ? quaternion_json(g - (*closed)[n]) : json();
        jrows.push_back(std::move(row));
      } else {
        csv << k[1] << ',' << k[2] << ',' << k[3] << ',' << k[4] << ',' << ps[n].to_string();
        csv_quaternion(csv, g);
        if (closed) {
          csv_quaternion(csv, (*closed)[n]);
          csv_quaternion(csv, g - (*closed)[n]);
        } else {
          csv_blank(csv);
          csv_blank(csv);
        }
        csv << '\n';
      }
      if (closed && !(g - (*closed)[n]).is_zero()) ++mismatches;
    }
  }
  CommandOutput out;
  out.code = mismatches == 0 ? ExitCode::Ok : ExitCode::CheckFailed;
  if (config.format == Format::Json) {
    json j = header(config);
    j["rows"] = jrows;
    j["summary"] = {{"rows", rows}, {"mismatches", mismatches}};
    out.text = render(j);
  } else {
    out.text = csv.str();
  }
  return out;
}

CommandOutput cmd_gauge(const RunConfig& config) {
  const Box& region = config.window;
  const Box touched = region.grow_upper();
  const Field field = make_field(config.solution, config.seed, touched, 1);

  QForm g = unit_form<Quaternion>();
  switch (config.gauge) {
    case GaugeChoice::Identity: break;
    case GaugeChoice::InverseX: g = inverse(coordinate_form()); break;
    case GaugeChoice::RandomUnit: {
      RationalSampler rng(derive_seed(config.seed, 3));
      g = random_unit_gauge(rng, touched);
      break;
    }
  }
  const QForm transformed = gauge_transform(field.potential, g, region);

  json verdict;
  bool verdict_passed = true;
  switch (config.gauge) {
    case GaugeChoice::Identity: {
      const auto cmp = compare(transformed, field.potential, region);
      verdict_passed = cmp.equal();
      verdict = {{"name", "identity"}, {"passed", verdict_passed}, {"mismatches", cmp.mismatches}};
      break;
    }
    case GaugeChoice::InverseX:
      if (config.solution == Solution::AntiInstanton) {
        const GaugeAtInfinityCheck c = gauge_at_infinity(region);
        verdict_passed = c.passed();
        verdict = {{"name", "gauge-infinity"},
                   {"passed", verdict_passed},
                   {"components", c.components},
                   {"mismatches", c.mismatches},
                   {"worst_residual", rational_json(c.worst)}};
      }
      break;
    case GaugeChoice::RandomUnit: {
      std::size_t off = 0;
      for (const auto& k : region.points()) {
        for (DirSet d : subsets_of_size(1)) off += is_su2_valued(transformed.at(k, d)) ? 0 : 1;
      }
      // Informational: non-constant unit gauges need not preserve su(2).
      verdict = {{"name", "su2-valued"}, {"informational", true}, {"non_su2_components", off}};
      break;
    }
  }

  CommandOutput out;
  out.code = verdict_passed ? ExitCode::Ok : ExitCode::CheckFailed;
  if (config.format == Format::Json) {
    json j = header(config);
    json rows = json::array();
    for (const auto& k : region.points()) {
      for (int axis = 1; axis <= kDim; ++axis) {
        json row;
        row["k"] = index_json(k);
        row["axis"] = axis;
        row["input"] = quaternion_json(field.potential.at(k, DirSet{axis}));
        row["transformed"] = quaternion_json(transformed.at(k, DirSet{axis}));
        rows.push_back(std::move(row));
      }
    }
    j["rows"] = rows;
    j["verdict"] = verdict.is_null() ? json() : verdict;
    out.text = render(j);
  } else {
    std::ostringstream os;
    os << "k1,k2,k3,k4,axis,input_re,input_i,input_j,input_k,out_re,out_i,out_j,out_k\n";
    for (const auto& k : region.points()) {
      for (int axis = 1; axis <= kDim; ++axis) {
        os << k[1] << ',' << k[2] << ',' << k[3] << ',' << k[4] << ',' << axis;
        csv_quaternion(os, field.potential.at(k, DirSet{axis}));
        csv_quaternion(os, transformed.at(k, DirSet{axis}));
        os << '\n';
      }
    }
    if (!verdict.is_null()) os << "# verdict " << verdict.dump() << '\n';
    out.text = os.str();
  }
  return out;
}

namespace {

struct Options {
  std::vector<std::int64_t> kmin;
  std::vector<std::int64_t> kmax;
  std::string solution = "anti-instanton";
  std::vector<std::string> checks;
  bool all = false;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 7;
  bool timing = false;
  std::vector<std::int64_t> k;
  std::string gauge = "identity";
};

void add_common(CLI::App& sub, Options& o) {
  sub.add_option("--kmin", o.kmin, "Lower window bound: 1 integer (all axes) or 4 (space or comma separated)")
      ->expected(1, 4)
      ->delimiter(',')
      ->envname("SDYM_KMIN");
  sub.add_option("--kmax", o.kmax, "Upper window bound: 1 integer (all axes) or 4 (space or comma separated)")
      ->expected(1, 4)
      ->delimiter(',')
      ->envname("SDYM_KMAX");
  sub.add_option("--solution", o.solution, "anti-instanton | instanton | flat | pure-gauge | random")
      ->envname("SDYM_SOLUTION");
  sub.add_option("--seed", o.seed, "Seed for random data")->envname("SDYM_SEED");
  sub.add_option("--format", o.format, "json | csv")->envname("SDYM_FORMAT");
  sub.add_option("--out", o.out, "Output file (default stdout)")->envname("SDYM_OUT");
}

RunConfig to_config(const std::string& command, const Options& o) {
  RunConfig c;
  c.command = command;
  c.solution = parse_solution(o.solution);
  c.format = parse_format(o.format);
  c.seed = o.seed;
  c.out = o.out;
  c.timing = o.timing;
  c.all = o.all;
  std::set<std::string> names(o.checks.begin(), o.checks.end());
  c.checks.assign(names.begin(), names.end());
  // A missing bound falls back to the default window's.
  const Box fallback = default_window(c.solution);
  const std::vector<std::int64_t> lo =
      o.kmin.empty() ? std::vector<std::int64_t>{fallback.lo[1], fallback.lo[2], fallback.lo[3], fallback.lo[4]}
                     : o.kmin;
  const std::vector<std::int64_t> hi =
      o.kmax.empty() ? std::vector<std::int64_t>{fallback.hi[1], fallback.hi[2], fallback.hi[3], fallback.hi[4]}
                     : o.kmax;
  c.window = make_window(lo, hi);
  if (!o.k.empty()) {
    if (o.k.size() != 4) throw ConfigError(ExitCode::Usage, "--k takes 4 integers");
    c.point = MultiIndex{o.k[0], o.k[1], o.k[2], o.k[3]};
  }
  c.gauge = parse_gauge(o.gauge);
  return c;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of discrete SU(2) Yang-Mills instantons", "sdym"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  add_common(*verify, o);
  verify->add_option("--check", o.checks, "Check to run (repeatable)")->take_all();
  verify->add_flag("--all", o.all, "Run every check");
  verify->add_flag("--timing", o.timing, "Include elapsed_ms per check (not deterministic)");

  auto* curv = app.add_subcommand("curvature", "Dump curvature components");
  add_common(*curv, o);
  curv->add_option("--k", o.k, "Single lattice point k1 k2 k3 k4")->expected(4);

  auto* gauge = app.add_subcommand("gauge", "Gauge transform the potential");
  add_common(*gauge, o);
  gauge->add_option("--g", o.gauge, "identity | inverse-x | random-unit")->envname("SDYM_GAUGE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Usage);
  }

  try {
    const std::string command = verify->parsed() ? "verify" : curv->parsed() ? "curvature" : "gauge";
    const RunConfig config = to_config(command, o);

    std::ofstream file;
    if (!config.out.empty()) {
      file.open(config.out, std::ios::binary | std::ios::trunc);
      if (!file) {
        err << "error: cannot write output file '" << config.out << "'\n";
        return static_cast<int>(ExitCode::UnwritableOutput);
      }
    }
    CommandOutput result;
    if (command == "verify") result = cmd_verify(config);
    else if (command == "curvature") result = cmd_curvature(config);
    else result = cmd_gauge(config);

    std::ostream& sink = config.out.empty() ? out : file;
    sink << result.text;
    sink.flush();
    if (!sink) {
      err << "error: failed writing output\n";
      return static_cast<int>(ExitCode::UnwritableOutput);
    }
    return static_cast<int>(result.code);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const SingularGaugeError& e) {
    err << "error: singular gauge at " << e.where().to_string() << ": " << e.what() << '\n';
    return static_cast<int>(ExitCode::SingularGauge);
  } catch (const SingularCoefficientError& e) {
    err << "error: singular coefficient at " << e.where().to_string() << ": " << e.what() << '\n';
    return static_cast<int>(ExitCode::SingularGauge);
  } catch (const WindowError& e) {
    err << "error: window too small at " << e.where().to_string() << ": " << e.what() << '\n';
    return static_cast<int>(ExitCode::InvalidWindow);
  }
}

}  // namespace sdym::cli
