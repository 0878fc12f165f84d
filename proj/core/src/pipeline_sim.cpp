#include "lpwan/pipeline_sim.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "lpwan/error.hpp"

namespace lpwan::sim {
namespace {

double quantize(double seconds) {
  const double ticks = std::max(1.0, std::round(seconds / kTimeResolution));
  return ticks * kTimeResolution;
}

[[noreturn]] void bad_config(const std::string& what) {
  throw Error(ErrorCode::BadCalibration, what);
}

} // namespace

void validate(const SchemeConfig& config) {
  const auto path = canonical_hops(config.scheme);
  const std::size_t expected = path.uplink.size() + path.downlink.size();
  if (config.hops.size() != expected) {
    bad_config(std::string(to_string(config.scheme)) + " needs " + std::to_string(expected) +
               " hops, got " + std::to_string(config.hops.size()));
  }

  std::set<HopId> seen;
  for (std::size_t i = 0; i < config.hops.size(); ++i) {
    const HopId want =
        i < path.uplink.size() ? path.uplink[i] : path.downlink[i - path.uplink.size()];
    const HopId got = config.hops[i].hop;
    if (got != want) {
      bad_config("hop " + std::to_string(i) + " is " + std::string(to_string(got)) +
                 ", expected " + std::string(to_string(want)));
    }
    if (!seen.insert(got).second) bad_config("duplicate hop " + std::string(to_string(got)));
    validate(config.hops[i].law);
  }

  if (config.render.hop != path.render) bad_config("render hop must be Render");
  validate(config.render.law);

  const auto& q = config.queue;
  if (!std::isfinite(q.polling_period_s) || q.polling_period_s < 0.0 ||
      !std::isfinite(q.offset_s) || q.offset_s < 0.0 || q.polling_period_s + q.offset_s <= 0.0) {
    throw Error(ErrorCode::InvalidParameters,
                "queue model needs non-negative polling period and offset with a positive sum");
  }
}

double sample_queue(const QueueModel& queue, SampleStream& rng) {
  return queue.offset_s + queue.polling_period_s * rng.uniform01();
}

LatencySample simulate_packet(const SchemeConfig& config, SampleStream& rng,
                              std::uint64_t sequence_no) {
  double uplink = 0.0;
  double downlink = 0.0;
  for (const auto& hop : config.hops) {
    const double draw = sample_hop(hop, rng);
    (segment_of(hop.hop) == Segment::Downlink ? downlink : uplink) += draw;
  }
  const double queue = sample_queue(config.queue, rng);
  const double render = sample_hop(config.render, rng);

  LatencySample s;
  s.t_ul = quantize(uplink);
  s.t_q = quantize(queue);
  s.t_dl = quantize(downlink);
  s.t_rend = quantize(render);
  s.scheme = config.scheme;
  s.sequence_no = sequence_no;
  return s;
}

std::vector<double> Campaign::e2e() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.t_e2e());
  return out;
}

Campaign run_campaign(const SchemeConfig& config, std::size_t n_samples, std::uint64_t seed,
                      std::chrono::duration<double> interval) {
  if (n_samples == 0) throw Error(ErrorCode::ZeroSamples, "campaign needs at least one sample");
  validate(config);

  Campaign campaign;
  campaign.scheme = config.scheme;
  campaign.seed = seed;
  campaign.interval = interval;
  campaign.samples.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    SampleStream rng(seed, i);
    campaign.samples.push_back(simulate_packet(config, rng, i));
  }
  return campaign;
}

} // namespace lpwan::sim
