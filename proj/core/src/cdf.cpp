#include "lpwan/cdf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lpwan/error.hpp"

namespace lpwan::stats {
namespace {

double cdf_of(const DensityEstimate& e, double tau, CdfKind kind) {
  return kind == CdfKind::Kde ? cdf_kde(e, tau) : cdf_empirical(e, tau);
}

} // namespace

double standard_normal_cdf(double x) noexcept {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double cdf_empirical(std::span<const double> samples, double tau) {
  if (samples.empty()) throw Error(ErrorCode::EmptyInput, "CDF of no samples");
  const auto hits = std::count_if(samples.begin(), samples.end(), [tau](double t) { return t <= tau; });
  return static_cast<double>(hits) / static_cast<double>(samples.size());
}

double cdf_empirical(const DensityEstimate& estimate, double tau) noexcept {
  const auto s = estimate.samples();
  const auto hits = std::upper_bound(s.begin(), s.end(), tau) - s.begin();
  return static_cast<double>(hits) / static_cast<double>(s.size());
}

double cdf_kde(const DensityEstimate& estimate, double tau) noexcept {
  const double h = estimate.bandwidth();
  double acc = 0.0;
  for (double ti : estimate.samples()) acc += standard_normal_cdf((tau - ti) / h);
  return acc / static_cast<double>(estimate.size());
}

QoeReport qoe_probability(const DensityEstimate& estimate, double target_s, double threshold) {
  QoeReport r;
  r.target_s = target_s;
  r.threshold = threshold;
  r.probability_empirical = cdf_empirical(estimate, target_s);
  r.probability_kde = cdf_kde(estimate, target_s);
  r.meets_threshold = r.probability_empirical >= threshold;
  return r;
}

IntersectionResult cdf_intersections(const DensityEstimate& a, const DensityEstimate& b,
                                     double lo, double hi, double grid_step, double tol,
                                     CdfKind kind) {
  if (!(lo < hi) || !(grid_step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::EmptyRange, "intersection scan needs lo < hi and grid_step > 0");
  }
  auto diff = [&](double t) { return cdf_of(a, t, kind) - cdf_of(b, t, kind); };

  const auto steps = static_cast<std::size_t>(std::ceil((hi - lo) / grid_step));
  IntersectionResult result;
  double max_abs = 0.0;

  // Last grid point whose difference was clearly nonzero.
  std::optional<std::pair<double, double>> anchor;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = std::min(hi, lo + grid_step * static_cast<double>(i));
    const double d = diff(t);
    max_abs = std::max(max_abs, std::abs(d));
    if (std::abs(d) < tol) continue;

    if (anchor && std::signbit(anchor->second) != std::signbit(d)) {
      double left = anchor->first;
      double right = t;
      double d_left = anchor->second;
      double mid = 0.5 * (left + right);
      for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (left + right);
        const double d_mid = diff(mid);
        if (std::abs(d_mid) < tol) break;
        if (right - left <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(mid))) break;
        if (std::signbit(d_mid) == std::signbit(d_left)) {
          left = mid;
          d_left = d_mid;
        } else {
          right = mid;
        }
      }
      const Crossing c{mid, 0.5 * (cdf_of(a, mid, kind) + cdf_of(b, mid, kind))};
      if (result.crossings.empty() || c.tau - result.crossings.back().tau >= grid_step) {
        result.crossings.push_back(c);
      }
    }
    anchor = {t, d};
  }

  result.degenerate = max_abs < tol;
  return result;
}

IntersectionResult cdf_intersections(const DensityEstimate& a, const DensityEstimate& b,
                                     CdfKind kind, double tol) {
  const double lo = std::min(a.min(), b.min());
  const double hi = std::max(a.max(), b.max());
  if (!(lo < hi)) throw Error(ErrorCode::EmptyRange, "pooled sample range is empty");
  const double step = (hi - lo) / static_cast<double>(kDefaultIntersectionGrid - 1);
  return cdf_intersections(a, b, lo, hi, step, tol, kind);
}

std::vector<double> curve_grid(const DensityEstimate& estimate, std::size_t points,
                               double pad_bandwidths) {
  if (points < 2) throw Error(ErrorCode::InvalidParameters, "curve needs at least 2 points");
  const double pad = pad_bandwidths * estimate.bandwidth();
  const double lo = estimate.min() - pad;
  const double hi = estimate.max() + pad;
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

std::vector<CurvePoint> kde_pdf_curve(const DensityEstimate& estimate,
                                      std::span<const double> grid) {
  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back({t, kde_pdf(estimate, t)});
  return out;
}

std::vector<CurvePoint> kde_cdf_curve(const DensityEstimate& estimate,
                                      std::span<const double> grid) {
  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back({t, cdf_kde(estimate, t)});
  return out;
}

std::vector<CurvePoint> empirical_cdf_curve(const DensityEstimate& estimate,
                                            std::span<const double> grid) {
  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back({t, cdf_empirical(estimate, t)});
  return out;
}

std::vector<CurvePoint> histogram_curve(const Histogram& histogram) {
  std::vector<CurvePoint> out;
  out.reserve(histogram.bins());
  for (std::size_t i = 0; i < histogram.bins(); ++i) {
    out.push_back({histogram.center(i), histogram.heights[i]});
  }
  return out;
}

} // namespace lpwan::stats
