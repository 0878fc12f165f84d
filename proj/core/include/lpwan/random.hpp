#pragma once

#include <cstdint>

namespace lpwan::sim {

/// Counter-based generator: output i of stream (seed, stream_id) is a pure
/// function of (seed, stream_id, i). Each simulated packet owns one stream,
/// so a sample's draws never depend on how many other samples were made.
///
/// The transforms below (Box-Muller, Marsaglia-Tsang) are implemented here
/// instead of using <random> distributions, whose outputs differ between
/// standard library vendors.
class SampleStream {
public:
  SampleStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  std::uint64_t next_u64() noexcept;

  /// Uniform on the open interval (0, 1).
  double uniform01() noexcept;

  double standard_normal() noexcept;

  /// Gamma(shape, 1). Requires shape > 0.
  double standard_gamma(double shape) noexcept;

  std::uint64_t counter() const noexcept { return counter_; }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

} // namespace lpwan::sim
