#include "config.hpp"

#include <array>
#include <utility>

namespace sdym::cli {

namespace {

template <typename E, std::size_t N>
E lookup(const std::array<std::pair<const char*, E>, N>& table, const std::string& name,
         const char* what) {
  for (const auto& [key, value] : table) {
    if (name == key) return value;
  }
  throw ConfigError(ExitCode::Usage, std::string("unknown ") + what + " '" + name + "'");
}

template <typename E, std::size_t N>
std::string name_of(const std::array<std::pair<const char*, E>, N>& table, E value) {
  for (const auto& [key, v] : table) {
    if (v == value) return key;
  }
  return "?";
}

constexpr std::array<std::pair<const char*, Solution>, 5> kSolutions{{
    {"anti-instanton", Solution::AntiInstanton},
    {"instanton", Solution::Instanton},
    {"flat", Solution::Flat},
    {"pure-gauge", Solution::PureGauge},
    {"random", Solution::Random},
}};

constexpr std::array<std::pair<const char*, Format>, 2> kFormats{{
    {"json", Format::Json},
    {"csv", Format::Csv},
}};

constexpr std::array<std::pair<const char*, GaugeChoice>, 3> kGauges{{
    {"identity", GaugeChoice::Identity},
    {"inverse-x", GaugeChoice::InverseX},
    {"random-unit", GaugeChoice::RandomUnit},
}};

MultiIndex expand(const std::vector<std::int64_t>& v, const char* flag) {
  if (v.size() == 1) return {v[0], v[0], v[0], v[0]};
  if (v.size() == 4) return {v[0], v[1], v[2], v[3]};
  throw ConfigError(ExitCode::InvalidWindow,
                    std::string(flag) + " takes 1 or 4 integers, got " + std::to_string(v.size()));
}

}  // namespace

Solution parse_solution(const std::string& name) { return lookup(kSolutions, name, "solution"); }
std::string to_string(Solution s) { return name_of(kSolutions, s); }
Format parse_format(const std::string& name) { return lookup(kFormats, name, "format"); }
std::string to_string(Format f) { return name_of(kFormats, f); }
GaugeChoice parse_gauge(const std::string& name) { return lookup(kGauges, name, "gauge"); }
std::string to_string(GaugeChoice g) { return name_of(kGauges, g); }

Box make_window(const std::vector<std::int64_t>& kmin, const std::vector<std::int64_t>& kmax) {
  const Box b{expand(kmin, "--kmin"), expand(kmax, "--kmax")};
  for (int a = 1; a <= kDim; ++a) {
    if (b.lo[a] >= b.hi[a]) {
      throw ConfigError(ExitCode::InvalidWindow,
                        "invalid window " + b.to_string() + ": kmin < kmax required on axis " +
                            std::to_string(a));
    }
  }
  return b;
}

Box default_window(Solution s) {
  // The pure gauge potential is singular at kappa = 0.
  return s == Solution::Flat ? Box::cube(1, 4) : Box::cube(-3, 3);
}

nlohmann::ordered_json to_json(const Box& b) {
  nlohmann::ordered_json j;
  j["kmin"] = {b.lo[1], b.lo[2], b.lo[3], b.lo[4]};
  j["kmax"] = {b.hi[1], b.hi[2], b.hi[3], b.hi[4]};
  return j;
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["window"] = to_json(c.window);
  j["solution"] = to_string(c.solution);
  j["seed"] = c.seed;
  j["format"] = to_string(c.format);
  if (c.command == "verify") {
    j["all"] = c.all;
    j["checks"] = c.checks;
  }
  if (c.command == "curvature" && c.point) {
    j["k"] = {(*c.point)[1], (*c.point)[2], (*c.point)[3], (*c.point)[4]};
  }
  if (c.command == "gauge") j["g"] = to_string(c.gauge);
  return j;
}

}  // namespace sdym::cli
