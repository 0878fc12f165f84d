#pragma once

// Reference implementations used only by tests. They deliberately take
// different routes from the library: full sorts instead of selection,
// pairwise-difference variance instead of two-pass moments, and plain
// counting instead of binary search.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace lpwan::test {

inline double oracle_mean(const std::vector<double>& x) {
  long double acc = 0.0L;
  for (double v : x) acc += v;
  return static_cast<double>(acc / static_cast<long double>(x.size()));
}

/// Sample variance from all pairwise differences:
/// s^2 = sum_{i<j} (x_i - x_j)^2 / (n (n - 1)).
inline double oracle_sd(const std::vector<double>& x) {
  const std::size_t n = x.size();
  long double acc = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long double d = static_cast<long double>(x[i]) - x[j];
      acc += d * d;
    }
  }
  return static_cast<double>(std::sqrt(acc / (static_cast<long double>(n) * (n - 1))));
}

inline double oracle_median(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();
  return n % 2 == 1 ? x[n / 2] : (x[n / 2 - 1] + x[n / 2]) / 2.0;
}

inline double oracle_mad(const std::vector<double>& x) {
  const double m = oracle_median(x);
  std::vector<double> dev;
  for (double v : x) dev.push_back(std::abs(v - m));
  return oracle_median(dev) / 0.6745;
}

inline double oracle_ecdf(const std::vector<double>& x, double tau) {
  std::vector<double> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  std::size_t count = 0;
  for (double v : sorted) {
    if (v <= tau) ++count;
    else break;
  }
  return static_cast<double>(count) / static_cast<double>(x.size());
}

namespace detail {
inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fm, double fb, double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}
} // namespace detail

/// Adaptive Simpson quadrature.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-10, int max_depth = 40) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, eps, max_depth);
}

/// Adaptive quadrature split into `pieces` panels so narrow kernels are
/// never stepped over by the first Simpson estimate.
inline double integrate_panels(const std::function<double(double)>& f, double a, double b,
                               int pieces, double eps = 1e-10) {
  double total = 0.0;
  const double w = (b - a) / pieces;
  for (int i = 0; i < pieces; ++i) {
    total += integrate(f, a + w * i, a + w * (i + 1), eps / pieces);
  }
  return total;
}

inline double trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
  double acc = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) acc += 0.5 * (y[i] + y[i - 1]) * (t[i] - t[i - 1]);
  return acc;
}

} // namespace lpwan::test
