#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "lpwan/hop_model.hpp"
#include "lpwan/random.hpp"
#include "lpwan/scheme.hpp"

namespace lpwan::sim {

/// Resolution of simulated latencies. Components are rounded to whole
/// microseconds (never below one) so that the six-decimal CSV form carries
/// them exactly and T_E2E stays the exact component sum on disk too.
inline constexpr double kTimeResolution = 1e-6;

inline constexpr std::chrono::milliseconds kDefaultInterval{500};
inline constexpr std::size_t kDefaultSampleCount = 10'000;

/// Database queuing delay before the client polls: uniform over
/// [0, polling_period] plus a fixed write offset.
struct QueueModel {
  double polling_period_s = 0.040;
  double offset_s = 0.001;

  friend bool operator==(const QueueModel&, const QueueModel&) = default;
};

struct SchemeConfig {
  Scheme scheme = Scheme::Concatenated;
  /// Uplink then downlink hops, in canonical order.
  std::vector<HopModel> hops;
  QueueModel queue;
  HopModel render{HopId::Render, Constant{0.1}};

  friend bool operator==(const SchemeConfig&, const SchemeConfig&) = default;
};

/// Checks hop order against canonical_hops(), hop-id uniqueness and every
/// law. Throws Error{BadCalibration} or Error{InvalidParameters}.
void validate(const SchemeConfig& config);

struct LatencySample {
  double t_ul = 0.0;
  double t_q = 0.0;
  double t_dl = 0.0;
  double t_rend = 0.0;
  Scheme scheme = Scheme::Concatenated;
  std::uint64_t sequence_no = 0;

  double t_e2e() const noexcept { return t_ul + t_q + t_dl + t_rend; }

  friend bool operator==(const LatencySample&, const LatencySample&) = default;
};

double sample_queue(const QueueModel& queue, SampleStream& rng);

LatencySample simulate_packet(const SchemeConfig& config, SampleStream& rng,
                              std::uint64_t sequence_no = 0);

struct Campaign {
  Scheme scheme = Scheme::Concatenated;
  std::uint64_t seed = 0;
  std::chrono::duration<double> interval = kDefaultInterval;
  std::vector<LatencySample> samples;

  std::size_t size() const noexcept { return samples.size(); }
  std::vector<double> e2e() const;
};

/// Sample i draws from SampleStream(seed, i), so the campaign is a pure
/// function of (config, n_samples, seed). Throws Error{ZeroSamples}.
Campaign run_campaign(const SchemeConfig& config, std::size_t n_samples, std::uint64_t seed,
                      std::chrono::duration<double> interval = kDefaultInterval);

} // namespace lpwan::sim
