#pragma once

#include <nlohmann/json.hpp>

#include "lpwan/cdf.hpp"
#include "lpwan/latency_stats.hpp"

namespace lpwan::stats {

// SummaryStats <-> {"n", "mean_s", "sd_s", "mad_s", "bandwidth", "kde_sd_s"}
void to_json(nlohmann::json& j, const SummaryStats& s);
void from_json(const nlohmann::json& j, SummaryStats& s);

void to_json(nlohmann::json& j, const ExcessLatency& e);
void to_json(nlohmann::json& j, const QoeReport& r);
void to_json(nlohmann::json& j, const Crossing& c);
void to_json(nlohmann::json& j, const IntersectionResult& r);

} // namespace lpwan::stats
