#include <benchmark/benchmark.h>

#include "sdym/gauge.hpp"
#include "sdym/random.hpp"
#include "sdym/solutions.hpp"

namespace {

using namespace sdym;

void BM_GenericCurvature(benchmark::State& state) {
  const Box window = Box::cube(-state.range(0), state.range(0));
  const QForm a = build(Variant::AntiInstanton).potential;
  for (auto _ : state) {
    QForm f = curvature(a).materialize(window);
    benchmark::DoNotOptimize(f);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(window.size()));
}
BENCHMARK(BM_GenericCurvature)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ClosedFormCurvature(benchmark::State& state) {
  const Box window = Box::cube(-state.range(0), state.range(0));
  for (auto _ : state) {
    for (const auto& k : window.points()) {
      auto c = closed_form_curvature(Variant::AntiInstanton, k);
      benchmark::DoNotOptimize(c);
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(window.size()));
}
BENCHMARK(BM_ClosedFormCurvature)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Bianchi(benchmark::State& state) {
  RationalSampler rng(4);
  const Box region = Box::cube(-1, 1);
  const QForm a = random_su2_connection(rng, region.grow_upper(DirSet::full(), 2));
  for (auto _ : state) {
    const QForm f = curvature(a);
    QForm r = (coboundary(f) + cup(a, f) - cup(f, a)).materialize(region);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Bianchi)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
