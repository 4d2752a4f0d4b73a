#pragma once

#include <cstdint>
#include <optional>

#include "config.hpp"
#include "sdym/gauge.hpp"

namespace sdym::cli {

/// The potential selected by --solution. Rule-backed for the analytic
/// solutions; seeded tables covering `window` plus `layers` upper layers for
/// the random ones.
struct Field {
  QForm potential;
  std::optional<Connection> connection;
};

Field make_field(Solution s, std::uint64_t seed, const Box& window, std::int64_t layers);

/// Deterministic per-purpose seed derived from the run seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace sdym::cli
