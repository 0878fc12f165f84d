#include "lpwan/calibration.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "lpwan/error.hpp"
#include "lpwan/number_format.hpp"

namespace lpwan::sim {
namespace {

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::BadCalibration, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double queue_variance(const QueueModel& q) {
  return q.polling_period_s * q.polling_period_s / 12.0;
}

double queue_mean(const QueueModel& q) { return q.offset_s + 0.5 * q.polling_period_s; }

} // namespace

SchemeConfig read_scheme_config(std::istream& in) {
  SchemeConfig config;
  bool have_scheme = false;
  bool have_render = false;
  std::size_t line_no = 0;

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) bad(line_no, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));

    try {
      if (key == "scheme") {
        const auto scheme = parse_scheme(value);
        if (!scheme) bad(line_no, "unknown scheme '" + std::string(value) + "'");
        config.scheme = *scheme;
        have_scheme = true;
      } else if (key == "queue.polling_period_s" || key == "queue.offset_s") {
        const auto v = parse_double(value);
        if (!v) bad(line_no, "bad number '" + std::string(value) + "'");
        (key == "queue.offset_s" ? config.queue.offset_s : config.queue.polling_period_s) = *v;
      } else if (key.starts_with("hop.") || key.starts_with("render.")) {
        const bool is_render = key.starts_with("render.");
        const auto name = key.substr(is_render ? 7 : 4);
        const auto hop = parse_hop_id(name);
        if (!hop) bad(line_no, "unknown hop '" + std::string(name) + "'");
        HopModel model{*hop, parse_law(std::string(value))};
        if (is_render) {
          config.render = model;
          have_render = true;
        } else {
          config.hops.push_back(model);
        }
      } else {
        bad(line_no, "unknown key '" + std::string(key) + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BadCalibration) throw;
      bad(line_no, e.what());
    }
  }

  if (!have_scheme) bad(line_no, "missing 'scheme'");
  if (!have_render) bad(line_no, "missing 'render.Render'");
  validate(config);
  return config;
}

SchemeConfig load_scheme_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open calibration " + path.string());
  return read_scheme_config(in);
}

void write_scheme_config(std::ostream& out, const SchemeConfig& config) {
  out << "scheme = " << to_string(config.scheme) << '\n';
  out << "queue.polling_period_s = " << format_shortest(config.queue.polling_period_s) << '\n';
  out << "queue.offset_s = " << format_shortest(config.queue.offset_s) << '\n';
  for (const auto& hop : config.hops) {
    out << "hop." << to_string(hop.hop) << " = " << format_law(hop.law) << '\n';
  }
  out << "render." << to_string(config.render.hop) << " = " << format_law(config.render.law)
      << '\n';
}

std::string to_text(const SchemeConfig& config) {
  std::ostringstream out;
  write_scheme_config(out, config);
  return out.str();
}

std::filesystem::path calibration_file(const std::filesystem::path& dir, Scheme scheme) {
  return dir / (std::string(to_string(scheme)) + ".cal");
}

CalibrationPlan default_plan(Scheme scheme) {
  using H = HopId;
  // Core-side hops are the same private infrastructure in every campaign.
  const HopBudget carrier{H::CarrierCore, 0.15, 0.3};
  const HopBudget broker{H::BrokerForward, 0.05, 0.3};
  const HopBudget ingest{H::CoreIngest, 0.08, 0.3};
  const HopBudget db{H::DbWrite, 0.03, 0.3};
  const HopBudget sensor{H::SensorTx, 0.05, 0.2};

  CalibrationPlan plan;
  plan.scheme = scheme;
  switch (scheme) {
  case Scheme::StandaloneUnlicensed:
    // Long right tail: WLAN, client and render hops are all dispersed, and
    // the LoRa radio hop (residual) carries the heaviest sigma.
    plan.target = {2.5789, 1.2051};
    plan.hops = {sensor, {H::UnlicensedRadio, {}, {}}, {H::WlanUplink, 0.30, 1.3},
                 carrier, broker, ingest, db,
                 {H::ClientRequest, 0.45, 1.0}, {H::CoreResponse, 0.30, 0.8}};
    plan.render = {H::Render, 0.6, 1.0};
    break;
  case Scheme::StandaloneCellular:
    plan.target = {2.9000, 0.5571};
    plan.hops = {sensor, {H::CellularUplink, {}, {}}, carrier, broker, ingest, db,
                 {H::ClientRequest, 0.45, 0.35}, {H::CoreResponse, 0.30, 0.3}};
    plan.render = {H::Render, 0.6, 0.25};
    break;
  case Scheme::Concatenated:
    plan.target = {3.1836, 0.5079};
    plan.hops = {sensor, {H::UnlicensedRadio, 0.25, 0.5}, {H::GatewaySerial, 0.10, 0.3},
                 {H::CellularUplink, {}, {}}, carrier, broker, ingest, db,
                 {H::ClientRequest, 0.45, 0.35}, {H::CoreResponse, 0.30, 0.3}};
    plan.render = {H::Render, 0.6, 0.25};
    break;
  }
  return plan;
}

SchemeConfig fit_calibration(const CalibrationPlan& plan) {
  std::vector<HopBudget> budgets = plan.hops;
  budgets.push_back(plan.render);

  double fixed_mean = queue_mean(plan.queue);
  double fixed_var = queue_variance(plan.queue);
  std::size_t residual_count = 0;
  for (const auto& b : budgets) {
    if (b.residual()) {
      ++residual_count;
      continue;
    }
    if (!b.mean_s || !b.cv) {
      throw Error(ErrorCode::BadCalibration,
                  std::string(to_string(b.hop)) + " budget needs both mean and cv");
    }
    fixed_mean += *b.mean_s;
    fixed_var += (*b.mean_s * *b.cv) * (*b.mean_s * *b.cv);
  }
  if (residual_count != 1) {
    throw Error(ErrorCode::BadCalibration, "plan needs exactly one residual hop");
  }

  const double residual_mean = plan.target.mean_s - fixed_mean;
  const double residual_var = plan.target.sd_s * plan.target.sd_s - fixed_var;
  if (!(residual_mean > 0.0) || !(residual_var > 0.0)) {
    throw Error(ErrorCode::BadCalibration, "fixed hop budgets exceed the target moments");
  }
  const double residual_cv = std::sqrt(residual_var) / residual_mean;

  auto to_model = [&](const HopBudget& b) {
    const Lognormal law = b.residual() ? lognormal_from_moments(residual_mean, residual_cv)
                                       : lognormal_from_moments(*b.mean_s, *b.cv);
    return HopModel{b.hop, law};
  };

  SchemeConfig config;
  config.scheme = plan.scheme;
  config.queue = plan.queue;
  for (const auto& b : plan.hops) config.hops.push_back(to_model(b));
  config.render = to_model(plan.render);
  validate(config);
  return config;
}

AnalyticMoments analytic_moments(const SchemeConfig& config) {
  AnalyticMoments m;
  m.queue_mean = queue_mean(config.queue);
  m.variance = queue_variance(config.queue);
  for (const auto& hop : config.hops) {
    (segment_of(hop.hop) == Segment::Downlink ? m.downlink_mean : m.uplink_mean) +=
        law_mean(hop.law);
    m.variance += law_variance(hop.law);
  }
  m.render_mean = law_mean(config.render.law);
  m.variance += law_variance(config.render.law);
  m.mean = m.uplink_mean + m.queue_mean + m.downlink_mean + m.render_mean;
  return m;
}

} // namespace lpwan::sim
