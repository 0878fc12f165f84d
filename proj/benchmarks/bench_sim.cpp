#include <benchmark/benchmark.h>

#include <array>
#include <sstream>

#include "lpwan/calibration.hpp"
#include "lpwan/dataset_io.hpp"
#include "lpwan/packet_codec.hpp"
#include "lpwan/pipeline_sim.hpp"

namespace {

using namespace lpwan;

sim::SchemeConfig shipped() {
  return sim::load_scheme_config(
      sim::calibration_file(LPWAN_BENCH_CALIBRATION_DIR, sim::Scheme::Concatenated));
}

void BM_RunCampaign(benchmark::State& state) {
  const auto config = shipped();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sim::run_campaign(config, static_cast<std::size_t>(state.range(0)), 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunCampaign)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_WriteCampaign(benchmark::State& state) {
  const auto campaign = sim::run_campaign(shipped(), 10'000, 42);
  for (auto _ : state) {
    std::ostringstream out;
    io::write_campaign(campaign, out);
    benchmark::DoNotOptimize(out.str().size());
  }
}
BENCHMARK(BM_WriteCampaign)->Unit(benchmark::kMillisecond);

void BM_PacketRoundTrip(benchmark::State& state) {
  codec::FieldBlock fields{};
  std::int64_t ts = 1'612'345'678;
  for (auto _ : state) {
    const auto wire = codec::build_payload("PK", ts++, fields).serialize();
    benchmark::DoNotOptimize(codec::parse_payload(wire, "PK"));
  }
}
BENCHMARK(BM_PacketRoundTrip);

} // namespace
