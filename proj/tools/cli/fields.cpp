#include "fields.hpp"

#include "sdym/random.hpp"
#include "sdym/solutions.hpp"

namespace sdym::cli {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Field make_field(Solution s, std::uint64_t seed, const Box& window, std::int64_t layers) {
  switch (s) {
    case Solution::AntiInstanton: {
      Connection c = build_anti_instanton();
      return {c.potential, c};
    }
    case Solution::Instanton: {
      Connection c = build_instanton();
      return {c.potential, c};
    }
    case Solution::Flat: {
      Connection c = pure_gauge_connection();
      return {c.potential, c};
    }
    case Solution::PureGauge: {
      RationalSampler rng(derive_seed(seed, 1));
      const QForm g = random_unit_gauge(rng, window.grow_upper(DirSet::full(), layers + 1));
      return {cup(conj(g), coboundary(g)), std::nullopt};
    }
    case Solution::Random: {
      RationalSampler rng(derive_seed(seed, 2));
      return {random_su2_connection(rng, window.grow_upper(DirSet::full(), layers)), std::nullopt};
    }
  }
  return {QForm::zero(1), std::nullopt};
}

}  // namespace sdym::cli
