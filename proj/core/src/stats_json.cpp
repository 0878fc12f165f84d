#include "lpwan/stats_json.hpp"

namespace lpwan::stats {

void to_json(nlohmann::json& j, const SummaryStats& s) {
  j = nlohmann::json{{"n", s.n},       {"mean_s", s.mean},         {"sd_s", s.sd},
                     {"mad_s", s.mad}, {"bandwidth", s.bandwidth}, {"kde_sd_s", s.kde_sd}};
}

void from_json(const nlohmann::json& j, SummaryStats& s) {
  j.at("n").get_to(s.n);
  j.at("mean_s").get_to(s.mean);
  j.at("sd_s").get_to(s.sd);
  j.at("mad_s").get_to(s.mad);
  j.at("bandwidth").get_to(s.bandwidth);
  j.at("kde_sd_s").get_to(s.kde_sd);
}

void to_json(nlohmann::json& j, const ExcessLatency& e) {
  j = nlohmann::json{{"excess_s", e.seconds}, {"excess_pct", e.percent}};
}

void to_json(nlohmann::json& j, const QoeReport& r) {
  j = nlohmann::json{{"target_s", r.target_s},
                     {"probability_empirical", r.probability_empirical},
                     {"probability_kde", r.probability_kde},
                     {"threshold", r.threshold},
                     {"meets_threshold", r.meets_threshold}};
}

void to_json(nlohmann::json& j, const Crossing& c) {
  j = nlohmann::json{{"tau_s", c.tau}, {"probability", c.probability}};
}

void to_json(nlohmann::json& j, const IntersectionResult& r) {
  j = nlohmann::json{{"crossings", r.crossings}, {"degenerate", r.degenerate}};
}

} // namespace lpwan::stats
