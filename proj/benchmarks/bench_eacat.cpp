#include <benchmark/benchmark.h>

#include "eacat/effect_algebra.hpp"
#include "eacat/generators.hpp"
#include "eacat/hilbert.hpp"
#include "eacat/omega.hpp"

using namespace eacat;

static void BM_DerivedProperties(benchmark::State& state) {
  EffectAlgebra a = product(boolean(3), boolean(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_derived_properties(a));
  state.SetLabel(std::to_string(a.size()) + " elements");
}
BENCHMARK(BM_DerivedProperties)->Arg(1)->Arg(2)->Arg(3);

static void BM_OmegaLaws(benchmark::State& state) {
  EffectAlgebra a = chain(static_cast<std::size_t>(state.range(0)));
  VerifyOptions opts{static_cast<unsigned>(state.range(1)), false};
  for (auto _ : state)
    benchmark::DoNotOptimize(omega::verify_omega_laws(a, 2, opts));
}
BENCHMARK(BM_OmegaLaws)->Args({3, 1})->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_CellEnumeration(benchmark::State& state) {
  omega::OmegaCategory C(boolean(3));
  for (auto _ : state)
    benchmark::DoNotOptimize(C.enumerate_cells(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CellEnumeration)->DenseRange(0, 3);

static void BM_ExtractBounded(benchmark::State& state) {
  RatMatrix seed = RatMatrix::scalar(2, Rational(1, state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(extract_algebra({seed}, ModelKind::Bounded, 2));
}
BENCHMARK(BM_ExtractBounded)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_IsPsd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RatMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = Rational(1, static_cast<int>(r + c + 1));  // Hilbert matrix
  for (auto _ : state)
    benchmark::DoNotOptimize(is_psd(m));
}
BENCHMARK(BM_IsPsd)->DenseRange(2, 6, 2);

BENCHMARK_MAIN();
