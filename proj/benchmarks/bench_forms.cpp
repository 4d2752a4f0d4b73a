#include <benchmark/benchmark.h>

#include "sdym/form.hpp"
#include "sdym/random.hpp"

namespace {

using namespace sdym;

const Box kWindow = Box::cube(-2, 2);

void BM_Coboundary(benchmark::State& state) {
  RationalSampler rng(1);
  const QForm phi = random_form(rng, static_cast<int>(state.range(0)), kWindow);
  for (auto _ : state) {
    QForm d = coboundary(phi).materialize(kWindow.shrink_upper());
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Coboundary)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Cup(benchmark::State& state) {
  RationalSampler rng(2);
  const int p = static_cast<int>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  const QForm phi = random_form(rng, p, kWindow);
  const QForm psi = random_form(rng, q, kWindow);
  for (auto _ : state) {
    QForm c = cup(phi, psi).materialize(kWindow.shrink_upper());
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Cup)->Args({0, 2})->Args({1, 1})->Args({1, 2})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_StarIota(benchmark::State& state) {
  RationalSampler rng(3);
  const QForm phi = random_form(rng, 2, kWindow);
  for (auto _ : state) {
    QForm s = iota(star(phi)).materialize(kWindow);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_StarIota)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
