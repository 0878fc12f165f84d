#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lpwan/density.hpp"

namespace lpwan::stats {

/// Minimum probability of meeting the latency target for user satisfaction.
inline constexpr double kQoeThreshold = 0.95;

/// Phi(x) = erfc(-x / sqrt 2) / 2, using std::erfc (a few ulp; far inside
/// a 1e-12 absolute error budget).
double standard_normal_cdf(double x) noexcept;

/// #{T_i <= tau} / n. Throws Error{EmptyInput}.
double cdf_empirical(std::span<const double> samples, double tau);

/// Empirical CDF over the estimate's sorted samples (O(log n)).
double cdf_empirical(const DensityEstimate& estimate, double tau) noexcept;

/// (1/n) sum Phi((tau - T_i) / h)
double cdf_kde(const DensityEstimate& estimate, double tau) noexcept;

struct QoeReport {
  double target_s = 0.0;
  double probability_empirical = 0.0;
  double probability_kde = 0.0;
  double threshold = kQoeThreshold;
  bool meets_threshold = false; // probability_empirical >= threshold
};

QoeReport qoe_probability(const DensityEstimate& estimate, double target_s,
                          double threshold = kQoeThreshold);

enum class CdfKind { Kde, Empirical };

struct Crossing {
  double tau = 0.0;
  double probability = 0.0;
};

struct IntersectionResult {
  std::vector<Crossing> crossings; // ordered by tau
  /// The two CDFs never differ by tol or more anywhere on the grid.
  bool degenerate = false;
};

/// Scans F_a - F_b on a uniform grid over [lo, hi] for sign changes and
/// bisects each bracket until |F_a - F_b| < tol. Crossings closer than
/// grid_step are merged. Throws Error{EmptyRange} unless lo < hi and
/// grid_step > 0.
IntersectionResult cdf_intersections(const DensityEstimate& a, const DensityEstimate& b,
                                     double lo, double hi, double grid_step, double tol = 1e-6,
                                     CdfKind kind = CdfKind::Kde);

inline constexpr std::size_t kDefaultIntersectionGrid = 2000;

/// Same scan over the pooled sample range with the default 2,000-point grid.
IntersectionResult cdf_intersections(const DensityEstimate& a, const DensityEstimate& b,
                                     CdfKind kind = CdfKind::Kde, double tol = 1e-6);

struct CurvePoint {
  double t = 0.0;
  double value = 0.0;
};

/// Uniform grid of `points` values over [min - pad*h, max + pad*h].
std::vector<double> curve_grid(const DensityEstimate& estimate, std::size_t points,
                               double pad_bandwidths = 6.0);

std::vector<CurvePoint> kde_pdf_curve(const DensityEstimate& estimate,
                                      std::span<const double> grid);
std::vector<CurvePoint> kde_cdf_curve(const DensityEstimate& estimate,
                                      std::span<const double> grid);
std::vector<CurvePoint> empirical_cdf_curve(const DensityEstimate& estimate,
                                            std::span<const double> grid);
/// Bin centres and heights.
std::vector<CurvePoint> histogram_curve(const Histogram& histogram);

} // namespace lpwan::stats
