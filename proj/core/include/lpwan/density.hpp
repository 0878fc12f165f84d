#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace lpwan::stats {

inline constexpr std::size_t kDefaultBins = 150;

/// Equal-width bins over [min, max] with density heights
/// (sum of height * width == 1).
///
/// When every sample is identical the range is empty; the result is then a
/// single bin of width eps = 1e-9 * max(1, |x|) centred on x, with height
/// 1 / eps, whatever bin count was asked for.
struct Histogram {
  std::vector<double> edges;   // size bins() + 1
  std::vector<double> heights; // size bins()
  std::vector<std::size_t> counts;

  std::size_t bins() const noexcept { return heights.size(); }
  double width() const noexcept { return edges.size() > 1 ? edges[1] - edges[0] : 0.0; }
  double center(std::size_t i) const noexcept { return 0.5 * (edges[i] + edges[i + 1]); }
  double area() const noexcept;
};

/// Throws Error{EmptyInput}, or Error{InvalidParameters} for n_bins == 0.
Histogram histogram(std::span<const double> samples, std::size_t n_bins = kDefaultBins);

/// Gaussian-kernel density estimate over a fixed sample set. Samples are
/// kept sorted and shared between copies.
class DensityEstimate {
public:
  /// Throws Error{EmptyInput} or Error{InvalidParameters} (h <= 0).
  DensityEstimate(std::vector<double> samples, double bandwidth,
                  std::size_t n_bins = kDefaultBins);

  /// Bandwidth from Silverman's rule on the MAD. Throws Error{ZeroSpread}
  /// when the MAD is zero.
  static DensityEstimate from_samples(std::vector<double> samples,
                                      std::size_t n_bins = kDefaultBins);

  std::span<const double> samples() const noexcept { return *samples_; }
  std::size_t size() const noexcept { return samples_->size(); }
  double bandwidth() const noexcept { return bandwidth_; }
  const Histogram& histogram() const noexcept { return histogram_; }
  double min() const noexcept { return samples_->front(); }
  double max() const noexcept { return samples_->back(); }

private:
  std::shared_ptr<const std::vector<double>> samples_;
  double bandwidth_;
  Histogram histogram_;
};

/// K_g(t) = exp(-t^2 / 2) / sqrt(2 pi)
double gaussian_kernel(double t) noexcept;

/// (1 / (n h)) * sum K_g((t - T_i) / h)
double kde_pdf(const DensityEstimate& estimate, double t) noexcept;

/// Exact SD of the kernel mixture: sqrt(sd_biased^2 + h^2).
double kde_sd(const DensityEstimate& estimate);

} // namespace lpwan::stats
