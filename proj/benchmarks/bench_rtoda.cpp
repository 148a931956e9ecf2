#include <benchmark/benchmark.h>

#include <random>

#include "rtoda/contour.hpp"
#include "rtoda/qcluster.hpp"
#include "rtoda/qseries.hpp"
#include "rtoda/wavefun.hpp"

using namespace rtoda;

static void BM_Phib(benchmark::State& st) {
  const auto ctx = QdContext::make(0.8);
  const cplx z(0.3, 0.2);
  for (auto _ : st) benchmark::DoNotOptimize(phib(z, ctx));
}
BENCHMARK(BM_Phib);

static void BM_PhibExtended(benchmark::State& st) {
  const auto ctx = QdContext::make(0.8, 0.0, 1e-12, Precision::Extended);
  const cplx z(0.3, 0.2);
  for (auto _ : st) benchmark::DoNotOptimize(phib(z, ctx));
}
BENCHMARK(BM_PhibExtended);

static void BM_Identity(benchmark::State& st) {
  const auto ctx = QdContext::make(0.8);
  const std::string name = identity_names()[st.range(0)];
  std::mt19937_64 rng(3);
  const Params p = draw_params(name, ctx, rng);
  for (auto _ : st) benchmark::DoNotOptimize(verify_identity(name, p, ctx));
  st.SetLabel(name);
}
BENCHMARK(BM_Identity)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

static void BM_WhittakerMB(benchmark::State& st) {
  const auto ctx = QdContext::make(0.8);
  for (auto _ : st) benchmark::DoNotOptimize(whittaker_mb({0.31, -0.42}, {0.25, -0.6}, ctx));
}
BENCHMARK(BM_WhittakerMB)->Unit(benchmark::kMillisecond);

static void BM_WhittakerGG(benchmark::State& st) {
  const auto ctx = QdContext::make(0.8);
  for (auto _ : st) benchmark::DoNotOptimize(whittaker_gg({0.31, -0.42}, {0.25, -0.6}, ctx));
}
BENCHMARK(BM_WhittakerGG)->Unit(benchmark::kMillisecond);

static void BM_HrWavefunction(benchmark::State& st) {
  const auto ctx = QdContext::make(0.8, 0.1);
  for (auto _ : st) benchmark::DoNotOptimize(hr_wavefunction({0.3, 0.05}, {0.2, -0.1}, ctx));
}
BENCHMARK(BM_HrWavefunction)->Unit(benchmark::kMillisecond);

static void BM_MacdonaldEigenResidual(benchmark::State& st) {
  const auto ctx = QdContext::make(0.8, 0.1);
  for (auto _ : st) benchmark::DoNotOptimize(macdonald_eigen_residual(1, {0.3, 0.05}, {0.2, -0.1}, ctx));
}
BENCHMARK(BM_MacdonaldEigenResidual)->Unit(benchmark::kMillisecond);

static void BM_LatticeExtrapolation(benchmark::State& st) {
  const auto ctx = QdContext::make(0.8, 0.15);
  for (auto _ : st)
    benchmark::DoNotOptimize(
        hr_renormalized_at_lattice({0.25, -0.15}, GeneralizedPartition2(0, 1), GeneralizedPartition2(0, 0), ctx));
}
BENCHMARK(BM_LatticeExtrapolation)->Unit(benchmark::kMillisecond);

static void BM_HcMacdonaldCoeff(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(hc_macdonald_coeff(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_HcMacdonaldCoeff)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_ClusterSuite(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(cluster_suite(4));
}
BENCHMARK(BM_ClusterSuite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
