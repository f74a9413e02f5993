#include <benchmark/benchmark.h>

#include "fockop/spectrum.hpp"
#include "fockop/truncation.hpp"

using namespace fockop;

namespace {

AffineSymbol block_symbol(Eigen::Index n) {
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  ComplexVector b = ComplexVector::Zero(n);
  a(0, 0) = std::polar(1.0, 0.7);
  for (Eigen::Index i = 1; i < n; ++i) {
    a(i, i) = Complex(0.6 / static_cast<double>(i), 0.1);
    if (i + 1 < n) a(i, i + 1) = 0.2;
    b(i) = 0.5;
  }
  return {a, b};
}

void BM_EnumerateSpectrum(benchmark::State& state) {
  const AffineSymbol s = block_symbol(state.range(0));
  const auto d = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_spectrum(s, d).products.size());
}
BENCHMARK(BM_EnumerateSpectrum)->Args({2, 8})->Args({3, 6})->Args({4, 5})->Unit(benchmark::kMicrosecond);

void BM_TruncatedSpectrum(benchmark::State& state) {
  const auto t = build_truncation(block_symbol(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_spectrum(t).size());
}
BENCHMARK(BM_TruncatedSpectrum)->Args({2, 10})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_EigenfunctionRoundTrip(benchmark::State& state) {
  const AffineSymbol s = block_symbol(3);
  for (auto _ : state) {
    const auto spec = construct_eigenfunction(s, MultiIndex{2}, MultiIndex{1, 2});
    benchmark::DoNotOptimize(verify_eigenfunction(spec, s));
  }
}
BENCHMARK(BM_EigenfunctionRoundTrip)->Unit(benchmark::kMicrosecond);

}  // namespace
