#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rmt/combinatorics.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/fredholm.hpp"
#include "rmt/painleve.hpp"
#include "rmt/spectra.hpp"
#include "rmt/specialfun.hpp"

namespace {

void BM_Airy(benchmark::State& state) {
  double x = -9.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rmt::specialfun::airy(x));
    x = x > 9.0 ? -9.0 : x + 0.01;
  }
}
BENCHMARK(BM_Airy);

void BM_GaussLegendre(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rmt::specialfun::gauss_legendre(order, -1.0, 1.0));
}
BENCHMARK(BM_GaussLegendre)->Arg(60)->Arg(240);

void BM_SolvePainleve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rmt::painleve::solve_pii(10.0, -16.0, 1e-12));
  state.SetLabel("x in [-16, 10]");
}
BENCHMARK(BM_SolvePainleve)->Unit(benchmark::kMillisecond);

void BM_TracyWidomLookup(benchmark::State& state) {
  const auto& sol = rmt::painleve::default_pii_solution();
  double s = -6.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rmt::painleve::tw_cdf(1, s, sol));
    s = s > 4.0 ? -6.0 : s + 0.001;
  }
}
BENCHMARK(BM_TracyWidomLookup);

void BM_AiryDeterminant(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto j = rmt::fredholm::IntervalUnion::semi_infinite(-2.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(rmt::fredholm::fredholm_det_fixed(rmt::fredholm::AiryKernel{}, j, 1.0, order));
}
BENCHMARK(BM_AiryDeterminant)->Arg(30)->Arg(60)->Arg(120)->Unit(benchmark::kMicrosecond);

void BM_SigmaPV(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rmt::painleve::solve_sigma_pv(1.0, 6.0 * 3.141592653589793, 1e-12));
}
BENCHMARK(BM_SigmaPV)->Unit(benchmark::kMillisecond);

void BM_SampleSpectrum(benchmark::State& state) {
  rmt::ensembles::EnsembleSpec spec;
  spec.beta = static_cast<int>(state.range(0));
  spec.n = static_cast<int>(state.range(1));
  std::uint64_t index = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rmt::ensembles::sample_spectrum(spec, 1, index++));
}
BENCHMARK(BM_SampleSpectrum)->Args({1, 100})->Args({1, 400})->Args({2, 400})->Args({4, 100})->Unit(
    benchmark::kMillisecond);

void BM_PatienceSort(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  rmt::Rng rng = rmt::stream_rng(2, 0);
  const auto p = rmt::combinatorics::Permutation::random(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rmt::combinatorics::patience_sort(p));
  state.SetComplexityN(n);
}
BENCHMARK(BM_PatienceSort)->RangeMultiplier(8)->Range(64, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_LisLength(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  rmt::Rng rng = rmt::stream_rng(3, 0);
  const auto p = rmt::combinatorics::Permutation::random(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rmt::combinatorics::lis_length(p));
  state.SetComplexityN(n);
}
BENCHMARK(BM_LisLength)->RangeMultiplier(8)->Range(64, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_GesselToeplitz(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  const int n = static_cast<int>(2.0 * std::sqrt(t));
  for (auto _ : state) benchmark::DoNotOptimize(rmt::combinatorics::log_gessel_toeplitz(n, t));
}
BENCHMARK(BM_GesselToeplitz)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Unfold(benchmark::State& state) {
  rmt::Rng rng = rmt::stream_rng(4, 0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  rmt::spectra::RawSpectrum raw;
  raw.values.resize(static_cast<std::size_t>(state.range(0)));
  for (auto& v : raw.values) v = u(rng);
  std::sort(raw.values.begin(), raw.values.end());
  const auto method = state.range(1) == 0 ? "polynomial:9" : "local_mean:21";
  const auto opts = rmt::spectra::parse_unfold_method(method);
  for (auto _ : state) benchmark::DoNotOptimize(rmt::spectra::unfold(raw, opts));
  state.SetLabel(method);
}
BENCHMARK(BM_Unfold)->Args({10000, 0})->Args({10000, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
