#include <numbers>

#include <benchmark/benchmark.h>

#include "fockop/dynamics.hpp"
#include "fockop/lattice.hpp"
#include "fockop/truncation.hpp"

using namespace fockop;

namespace {

void BM_RationalIndependence(benchmark::State& state) {
  std::vector<double> thetas;
  for (std::int64_t k = 0; k < state.range(0); ++k) thetas.push_back(0.37 + 0.91 * static_cast<double>(k));
  const AngleSet angles = AngleSet::floating(thetas);
  for (auto _ : state) benchmark::DoNotOptimize(rational_independence(angles).residual);
}
BENCHMARK(BM_RationalIndependence)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_LllReduce(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  IntegerBasis basis(m, std::vector<std::int64_t>(m + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    basis[i][i] = 1;
    basis[i][m] = static_cast<std::int64_t>(1e12 * (std::numbers::pi * static_cast<double>(i + 1) / 7.3 + 0.1));
  }
  for (auto _ : state) {
    IntegerBasis b = basis;
    lll_reduce(b);
    benchmark::DoNotOptimize(b.data());
  }
}
BENCHMARK(BM_LllReduce)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_OrbitDensity(benchmark::State& state) {
  ComplexMatrix a(1, 1);
  a(0, 0) = 0.5;
  ComplexVector b(1);
  b(0) = 1.0;
  const AffineSymbol s(a, b);
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto seed = kernel_polynomial(ComplexVector::Ones(1), N);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_density_experiment(s, seed, N, 2 * N).reached);
}
BENCHMARK(BM_OrbitDensity)->Arg(8)->Arg(20)->Unit(benchmark::kMicrosecond);

}  // namespace
