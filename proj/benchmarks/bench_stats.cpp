#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lpwan/cdf.hpp"
#include "lpwan/density.hpp"
#include "lpwan/latency_stats.hpp"

namespace {

using namespace lpwan::stats;

std::vector<double> draws(std::size_t n) {
  std::mt19937_64 gen(1);
  std::lognormal_distribution<double> law(1.1, 0.2);
  std::vector<double> x(n);
  for (auto& v : x) v = law(gen);
  return x;
}

void BM_Mad(benchmark::State& state) {
  const auto x = draws(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mad(x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Mad)->Arg(1'000)->Arg(10'000)->Arg(100'000);

void BM_Summarize(benchmark::State& state) {
  const auto x = draws(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(summarize(x));
}
BENCHMARK(BM_Summarize)->Arg(10'000);

void BM_KdePdfGrid(benchmark::State& state) {
  const auto e = DensityEstimate::from_samples(draws(10'000));
  const auto grid = curve_grid(e, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kde_pdf_curve(e, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KdePdfGrid)->Arg(256)->Arg(1024);

void BM_CdfKde(benchmark::State& state) {
  const auto e = DensityEstimate::from_samples(draws(10'000));
  double tau = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cdf_kde(e, tau));
    tau = tau > 4.0 ? 2.0 : tau + 0.01;
  }
}
BENCHMARK(BM_CdfKde);

void BM_Intersections(benchmark::State& state) {
  const auto a = DensityEstimate::from_samples(draws(10'000));
  auto y = draws(10'000);
  for (auto& v : y) v *= 1.05;
  const auto b = DensityEstimate::from_samples(std::move(y));
  for (auto _ : state) benchmark::DoNotOptimize(cdf_intersections(a, b));
}
BENCHMARK(BM_Intersections)->Unit(benchmark::kMillisecond);

} // namespace
