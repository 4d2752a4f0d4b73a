#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "sdym/form.hpp"
#include "sdym/rational.hpp"

namespace sdym::cli {

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct CheckResult {
  std::string name;
  std::string anchor;
  std::optional<Box> region;
  Status status = Status::Pass;
  std::size_t points = 0;
  Rational worst;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  nlohmann::ordered_json counterexamples = nlohmann::ordered_json::array();
  double elapsed_ms = 0;

  [[nodiscard]] bool passed() const { return status != Status::Fail; }
};

/// Accumulates residuals. A check built on a tally passes iff every residual
/// is exactly zero.
class Tally {
 public:
  static constexpr std::size_t kMaxCounterexamples = 10;

  void residual(const Rational& r, const nlohmann::ordered_json& where);
  template <typename C>
  void compare(const FormComparison<C>& c, const std::string& label);
  void count_points(std::size_t n) { points_ += n; }

  [[nodiscard]] std::size_t points() const { return points_; }
  [[nodiscard]] std::size_t failures() const { return failures_; }
  [[nodiscard]] const Rational& worst() const { return worst_; }

  /// Fills status, points, worst and counterexamples.
  void finish(CheckResult& r) const;

 private:
  std::size_t points_ = 0;
  std::size_t failures_ = 0;
  Rational worst_;
  nlohmann::ordered_json counterexamples_ = nlohmann::ordered_json::array();
};

struct CheckSpec {
  std::string name;
  std::string anchor;
  /// Solutions the check reads; empty when it does not depend on --solution.
  std::vector<Solution> solutions;
  std::function<CheckResult(const RunConfig&)> run;

  [[nodiscard]] bool applies_to(Solution s) const;
};

/// All checks, sorted by name.
const std::vector<CheckSpec>& registry();
const CheckSpec* find_check(const std::string& name);

/// Runs one check, filling name, anchor and (optionally) elapsed time.
CheckResult run_check(const CheckSpec& spec, const RunConfig& config);

/// Checks selected by the config: every registered check with --all, the
/// named ones otherwise. Throws ConfigError for unknown names (UnknownCheck),
/// for an explicit check that does not apply to the chosen solution, and for
/// an empty selection (Usage).
std::vector<const CheckSpec*> select_checks(const RunConfig& config);

nlohmann::ordered_json cell_json(const Cell& c);
nlohmann::ordered_json index_json(const MultiIndex& k);
nlohmann::ordered_json rational_json(const Rational& r);

}  // namespace sdym::cli
