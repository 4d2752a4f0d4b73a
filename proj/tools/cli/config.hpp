#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdym/lattice.hpp"

namespace sdym::cli {

/// Process exit status. Every failure class has its own code.
enum class ExitCode : int {
  Ok = 0,
  CheckFailed = 1,
  Usage = 2,
  InvalidWindow = 3,
  UnknownCheck = 4,
  UnwritableOutput = 5,
  SingularGauge = 6,
};

/// Configuration problem detected before any computation starts.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

enum class Solution { AntiInstanton, Instanton, Flat, PureGauge, Random };
enum class Format { Json, Csv };
enum class GaugeChoice { Identity, InverseX, RandomUnit };

Solution parse_solution(const std::string& name);
std::string to_string(Solution s);
Format parse_format(const std::string& name);
std::string to_string(Format f);
GaugeChoice parse_gauge(const std::string& name);
std::string to_string(GaugeChoice g);

/// Builds the inclusive window from one bound (repeated on every axis) or
/// four. Requires kmin < kmax on every axis.
Box make_window(const std::vector<std::int64_t>& kmin, const std::vector<std::int64_t>& kmax);

/// Window used when --kmin/--kmax are absent.
Box default_window(Solution s);

struct RunConfig {
  std::string command = "verify";
  Box window = Box::cube(-3, 3);
  Solution solution = Solution::AntiInstanton;
  std::vector<std::string> checks;  // sorted, unique
  bool all = false;
  Format format = Format::Json;
  std::string out;  // empty: stdout
  std::uint64_t seed = 7;
  bool timing = false;
  std::optional<MultiIndex> point;  // curvature --k
  GaugeChoice gauge = GaugeChoice::Identity;
};

/// Echo of the configuration for reports. The output path is left out so
/// that the same run written to two places produces identical bytes.
nlohmann::ordered_json to_json(const RunConfig& c);

nlohmann::ordered_json to_json(const Box& b);

}  // namespace sdym::cli
