#include "lpwan/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lpwan/error.hpp"
#include "lpwan/latency_stats.hpp"

namespace lpwan::stats {

double Histogram::area() const noexcept {
  double a = 0.0;
  for (std::size_t i = 0; i < heights.size(); ++i) a += heights[i] * (edges[i + 1] - edges[i]);
  return a;
}

Histogram histogram(std::span<const double> samples, std::size_t n_bins) {
  if (samples.empty()) throw Error(ErrorCode::EmptyInput, "histogram of no samples");
  if (n_bins == 0) throw Error(ErrorCode::InvalidParameters, "histogram needs at least one bin");

  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double n = static_cast<double>(samples.size());

  Histogram h;
  if (!(hi > lo)) {
    const double eps = 1e-9 * std::max(1.0, std::abs(lo));
    h.edges = {lo - eps / 2.0, lo + eps / 2.0};
    h.counts = {samples.size()};
    h.heights = {1.0 / (h.edges[1] - h.edges[0])};
    return h;
  }

  const double width = (hi - lo) / static_cast<double>(n_bins);
  h.edges.resize(n_bins + 1);
  for (std::size_t i = 0; i <= n_bins; ++i) h.edges[i] = lo + width * static_cast<double>(i);
  h.edges.back() = hi;

  h.counts.assign(n_bins, 0);
  for (double t : samples) {
    auto idx = static_cast<std::size_t>((t - lo) / width);
    h.counts[std::min(idx, n_bins - 1)] += 1;
  }

  h.heights.resize(n_bins);
  for (std::size_t i = 0; i < n_bins; ++i) {
    h.heights[i] = static_cast<double>(h.counts[i]) / (n * (h.edges[i + 1] - h.edges[i]));
  }
  return h;
}

DensityEstimate::DensityEstimate(std::vector<double> samples, double bandwidth,
                                 std::size_t n_bins)
    : bandwidth_(bandwidth) {
  if (samples.empty()) throw Error(ErrorCode::EmptyInput, "density estimate of no samples");
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw Error(ErrorCode::InvalidParameters, "KDE bandwidth must be positive");
  }
  std::sort(samples.begin(), samples.end());
  histogram_ = stats::histogram(samples, n_bins);
  samples_ = std::make_shared<const std::vector<double>>(std::move(samples));
}

DensityEstimate DensityEstimate::from_samples(std::vector<double> samples, std::size_t n_bins) {
  const double spread = mad(samples);
  const double h = silverman_bandwidth(spread, samples.size());
  return DensityEstimate(std::move(samples), h, n_bins);
}

double gaussian_kernel(double t) noexcept {
  return std::exp(-0.5 * t * t) * (0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2);
}

double kde_pdf(const DensityEstimate& estimate, double t) noexcept {
  const double h = estimate.bandwidth();
  double acc = 0.0;
  for (double ti : estimate.samples()) acc += gaussian_kernel((t - ti) / h);
  return acc / (static_cast<double>(estimate.size()) * h);
}

double kde_sd(const DensityEstimate& estimate) {
  const double s = sd_biased(estimate.samples());
  const double h = estimate.bandwidth();
  return std::sqrt(s * s + h * h);
}

} // namespace lpwan::stats
