#pragma once

#include <string>
#include <variant>

#include "lpwan/random.hpp"
#include "lpwan/scheme.hpp"

namespace lpwan::sim {

// Positive latency laws, all in seconds.

struct Lognormal {
  double mu = 0.0;    // mean of log(X)
  double sigma = 0.0; // SD of log(X), > 0

  friend bool operator==(const Lognormal&, const Lognormal&) = default;
};

struct Gamma {
  double shape = 1.0; // k > 0
  double scale = 1.0; // theta > 0

  friend bool operator==(const Gamma&, const Gamma&) = default;
};

/// shift + Exp(rate); shift >= 0, rate > 0.
struct ShiftedExponential {
  double shift = 0.0;
  double rate = 1.0;

  friend bool operator==(const ShiftedExponential&, const ShiftedExponential&) = default;
};

struct Constant {
  double value = 0.0; // > 0

  friend bool operator==(const Constant&, const Constant&) = default;
};

using LatencyLaw = std::variant<Lognormal, Gamma, ShiftedExponential, Constant>;

/// Throws Error{InvalidParameters} when the law cannot yield strictly
/// positive finite draws.
void validate(const LatencyLaw& law);

double law_mean(const LatencyLaw& law);
double law_variance(const LatencyLaw& law);

/// Lognormal with the given mean and coefficient of variation.
Lognormal lognormal_from_moments(double mean, double cv);

struct HopModel {
  HopId hop = HopId::SensorTx;
  LatencyLaw law = Constant{1e-3};

  friend bool operator==(const HopModel&, const HopModel&) = default;
};

/// One strictly positive draw; deterministic given the stream state.
double sample_hop(const HopModel& hop, SampleStream& rng);

/// Text form used in calibration files, e.g. "lognormal mu=-1.2 sigma=0.4".
std::string format_law(const LatencyLaw& law);
LatencyLaw parse_law(const std::string& text);

} // namespace lpwan::sim
