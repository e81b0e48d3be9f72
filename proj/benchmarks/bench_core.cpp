#include <benchmark/benchmark.h>

#include "landscape/montecarlo.hpp"
#include "landscape/verify.hpp"
#include "landscape/volumes.hpp"

using namespace landscape;

static void BM_HaarUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream stream(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(haar_unitary(n, stream));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_HaarUnitary)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_HermitianEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream stream(2);
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = stream.complex_normal();
  const ComplexMatrix h = 0.5 * (g + g.adjoint());
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eig(h));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_ExpmSkew(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream stream(3);
  const SkewHermitianMatrix x = random_skew(n, stream);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expm_skew(x));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ExpmSkew)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void BM_EnumerateSubmanifolds(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LandscapeSpec spec = nondegenerate_spec(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_submanifolds(spec));
  }
}
BENCHMARK(BM_EnumerateSubmanifolds)->DenseRange(3, 6);

static void BM_OrbitVolume(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LandscapeSpec spec = rank_one_spec(n);
  const CriticalSubmanifold sub = build_submanifold(spec, rank_one_max_table(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vol_orbit(spec, sub));
    benchmark::DoNotOptimize(volfrac_estimate(spec, sub));
  }
}
BENCHMARK(BM_OrbitVolume)->RangeMultiplier(4)->Range(4, 256);

static void BM_FAlongNormal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LandscapeSpec spec = rank_one_spec(n);
  RandomStream stream(4);
  const CriticalPoint point =
      random_critical_point(spec, rank_one_max_table(n), stream);
  const auto vectors = nonzero_hessian_eigenvectors(spec, point.pairing);
  const SkewHermitianMatrix a = assemble_normal_direction(point, {vectors[0]}, {1.0});
  const auto grid = uniform_grid(0.0, 1.1, 200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f_along_normal(spec, point, a, grid));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FAlongNormal)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_ConjectureTrial(benchmark::State& state) {
  CampaignConfig config;
  config.dims = {static_cast<int>(state.range(0))};
  config.seed = 5;
  std::uint64_t index = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_campaign_trial(config, index++));
  }
}
BENCHMARK(BM_ConjectureTrial)->Arg(6)->Arg(12)->Arg(24);

BENCHMARK_MAIN();
