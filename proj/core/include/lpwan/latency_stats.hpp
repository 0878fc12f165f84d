#pragma once

#include <cstddef>
#include <span>

namespace lpwan::stats {

/// Normal quartile used to scale the median absolute deviation into a
/// normal-equivalent SD.
inline constexpr double kMadScale = 0.6745;

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0; // n - 1 denominator
};

/// Throws Error{EmptyInput}.
double mean(std::span<const double> samples);

/// Two-pass mean and sample SD. Throws Error{EmptyInput | TooFewSamples}.
MeanSd mean_sd(std::span<const double> samples);

/// SD with the 1/n denominator, the form used by the KDE variance identity.
double sd_biased(std::span<const double> samples);

/// Midpoint of the two central order statistics for even n.
double median(std::span<const double> samples);

/// med(|T_i - med(T)|) / 0.6745. Throws Error{EmptyInput}.
double mad(std::span<const double> samples);

/// Silverman's rule on the MAD spread: mad * (4 / (3n))^(1/5).
/// Throws Error{ZeroSpread} for mad == 0 and Error{EmptyInput} for n == 0.
double silverman_bandwidth(double mad, std::size_t n);

/// SD of the Gaussian-kernel mixture, sqrt(sd_biased^2 + h^2). This form
/// takes the printed (n - 1) SD and converts it.
double kde_sd_from_summary(double sd, std::size_t n, double bandwidth);

/// One row of the density-estimation table.
struct SummaryStats {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
  double mad = 0.0;
  double bandwidth = 0.0; // 0 when mad == 0
  double kde_sd = 0.0;
};

/// Requires n >= 2. A zero MAD leaves bandwidth at 0 and kde_sd at the
/// biased SD; building a KDE from such data is rejected separately.
SummaryStats summarize(std::span<const double> samples);

struct ExcessLatency {
  double seconds = 0.0;
  double percent = 0.0; // of b's mean
};

/// a.mean - b.mean, absolute and relative to b. Throws Error{ZeroBaseline}.
ExcessLatency excess_latency(const SummaryStats& a, const SummaryStats& b);
ExcessLatency excess_latency(double mean_a, double mean_b);

} // namespace lpwan::stats
