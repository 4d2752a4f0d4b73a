#include <benchmark/benchmark.h>

#include "sdym/quaternion.hpp"
#include "sdym/rational.hpp"

namespace {

using sdym::Quaternion;
using sdym::Rational;

void BM_RationalSmallSum(benchmark::State& state) {
  Rational acc;
  for (auto _ : state) {
    for (int n = 1; n <= 64; ++n) acc += Rational(1, n * (n + 1));
    benchmark::DoNotOptimize(acc);
    acc = Rational();
  }
}
BENCHMARK(BM_RationalSmallSum);

// Harmonic partial sums outgrow 64 bits and exercise the GMP path.
void BM_RationalHarmonic(benchmark::State& state) {
  const int terms = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Rational acc;
    for (int n = 1; n <= terms; ++n) acc += Rational(1, n);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_RationalHarmonic)->Arg(20)->Arg(60)->Arg(120);

void BM_QuaternionProduct(benchmark::State& state) {
  const Quaternion a{Rational(1, 3), Rational(-2, 5), Rational(7, 11), Rational(1, 2)};
  const Quaternion b{Rational(3, 7), Rational(1, 9), Rational(-4, 13), Rational(5, 6)};
  for (auto _ : state) {
    Quaternion c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_QuaternionProduct);

void BM_QuaternionInverse(benchmark::State& state) {
  const Quaternion a{Rational(1, 3), Rational(-2, 5), Rational(7, 11), Rational(1, 2)};
  for (auto _ : state) {
    Quaternion c = inverse(a);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_QuaternionInverse);

}  // namespace

BENCHMARK_MAIN();
