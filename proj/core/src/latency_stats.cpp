#include "lpwan/latency_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "lpwan/error.hpp"

namespace lpwan::stats {
namespace {

void require_nonempty(std::span<const double> samples) {
  if (samples.empty()) throw Error(ErrorCode::EmptyInput, "no samples");
}

double sum_sq_dev(std::span<const double> samples, double m) {
  double acc = 0.0;
  for (double t : samples) acc += (t - m) * (t - m);
  return acc;
}

// Median of a scratch buffer; reorders it.
double median_in_place(std::vector<double>& v) {
  const std::size_t n = v.size();
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(v.begin(), mid, v.end());
  const double upper = *mid;
  if (n % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), mid);
  return lower + (upper - lower) / 2.0;
}

} // namespace

double mean(std::span<const double> samples) {
  require_nonempty(samples);
  return std::accumulate(samples.begin(), samples.end(), 0.0) /
         static_cast<double>(samples.size());
}

MeanSd mean_sd(std::span<const double> samples) {
  require_nonempty(samples);
  if (samples.size() < 2) throw Error(ErrorCode::TooFewSamples, "SD needs at least 2 samples");
  const double m = mean(samples);
  return {m, std::sqrt(sum_sq_dev(samples, m) / static_cast<double>(samples.size() - 1))};
}

double sd_biased(std::span<const double> samples) {
  const double m = mean(samples);
  return std::sqrt(sum_sq_dev(samples, m) / static_cast<double>(samples.size()));
}

double median(std::span<const double> samples) {
  require_nonempty(samples);
  std::vector<double> scratch(samples.begin(), samples.end());
  return median_in_place(scratch);
}

double mad(std::span<const double> samples) {
  require_nonempty(samples);
  std::vector<double> scratch(samples.begin(), samples.end());
  const double center = median_in_place(scratch);
  for (auto& t : scratch) t = std::abs(t - center);
  return median_in_place(scratch) / kMadScale;
}

double silverman_bandwidth(double mad, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "bandwidth needs n >= 1");
  if (!(mad > 0.0)) throw Error(ErrorCode::ZeroSpread, "MAD is zero; KDE is degenerate");
  return mad * std::pow(4.0 / (3.0 * static_cast<double>(n)), 0.2);
}

double kde_sd_from_summary(double sd, std::size_t n, double bandwidth) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "kde_sd needs n >= 1");
  const double nd = static_cast<double>(n);
  const double var_biased = sd * sd * (nd - 1.0) / nd;
  return std::sqrt(var_biased + bandwidth * bandwidth);
}

SummaryStats summarize(std::span<const double> samples) {
  const auto [m, sd] = mean_sd(samples);
  SummaryStats s;
  s.n = samples.size();
  s.mean = m;
  s.sd = sd;
  s.mad = mad(samples);
  s.bandwidth = s.mad > 0.0 ? silverman_bandwidth(s.mad, s.n) : 0.0;
  const double biased = sd_biased(samples);
  s.kde_sd = std::sqrt(biased * biased + s.bandwidth * s.bandwidth);
  return s;
}

ExcessLatency excess_latency(double mean_a, double mean_b) {
  if (mean_b == 0.0) throw Error(ErrorCode::ZeroBaseline, "baseline mean is zero");
  const double delta = mean_a - mean_b;
  return {delta, delta / mean_b * 100.0};
}

ExcessLatency excess_latency(const SummaryStats& a, const SummaryStats& b) {
  return excess_latency(a.mean, b.mean);
}

} // namespace lpwan::stats
