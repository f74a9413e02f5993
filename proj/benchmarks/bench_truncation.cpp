#include <benchmark/benchmark.h>

#include "fockop/analysis.hpp"
#include "fockop/truncation.hpp"

using namespace fockop;

namespace {

AffineSymbol generic_symbol(Eigen::Index n) {
  ComplexMatrix a(n, n);
  ComplexVector b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    b(i) = Complex(0.3 / static_cast<double>(i + 1), -0.1);
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(0.5 / static_cast<double>(i + j + 2), 0.05 * static_cast<double>(i - j));
  }
  return {a, b};
}

// args: n, N
void BM_BuildTruncation(benchmark::State& state) {
  const AffineSymbol s = generic_symbol(state.range(0));
  const auto N = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_truncation(s, N).matrix.data());
  state.counters["dim"] = static_cast<double>(build_basis(s.dimension(), N).size());
}
BENCHMARK(BM_BuildTruncation)->Args({1, 30})->Args({2, 10})->Args({2, 20})->Args({3, 6})->Args({3, 12})
    ->Unit(benchmark::kMillisecond);

void BM_ExactTruncation(benchmark::State& state) {
  const auto s = ExactAffineSymbol::from_symbol(generic_symbol(state.range(0)));
  const auto N = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_exact_truncation(s, N).coefficients.data());
}
BENCHMARK(BM_ExactTruncation)->Args({1, 20})->Args({2, 6})->Unit(benchmark::kMillisecond);

void BM_TruncatedNorm(benchmark::State& state) {
  const auto t = build_truncation(generic_symbol(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_norm(t));
}
BENCHMARK(BM_TruncatedNorm)->Args({1, 30})->Args({2, 10})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_ColumnNormsByShell(benchmark::State& state) {
  const AffineSymbol s = generic_symbol(state.range(0));
  const auto N = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(column_norms_by_shell(s, N).data());
}
BENCHMARK(BM_ColumnNormsByShell)->Args({2, 30})->Args({3, 15})->Unit(benchmark::kMillisecond);

void BM_SchattenIntegrals(benchmark::State& state) {
  const AffineSymbol s = generic_symbol(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schatten_integrals(s, 2.0).int_cphi);
}
BENCHMARK(BM_SchattenIntegrals)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
