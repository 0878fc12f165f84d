#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lpwan/pipeline_sim.hpp"

namespace lpwan::sim {

// Calibration file format (one file per scheme, "<tag>.cal"):
//
//   # comment
//   scheme = concat
//   queue.polling_period_s = 0.04
//   queue.offset_s = 0.001
//   hop.SensorTx = lognormal mu=-3.0154 sigma=0.198
//   ...                      (uplink then downlink, canonical order)
//   render.Render = lognormal mu=-0.54 sigma=0.25
//
// Law families: "lognormal mu= sigma=", "gamma shape= scale=",
// "shifted_exponential shift= rate=", "constant value=". Units are seconds.

SchemeConfig read_scheme_config(std::istream& in);
SchemeConfig load_scheme_config(const std::filesystem::path& path);
void write_scheme_config(std::ostream& out, const SchemeConfig& config);
std::string to_text(const SchemeConfig& config);

/// "<dir>/<scheme tag>.cal"
std::filesystem::path calibration_file(const std::filesystem::path& dir, Scheme scheme);

struct MomentTarget {
  double mean_s = 0.0;
  double sd_s = 0.0;
};

/// Budget for one hop of a plan. A hop with neither mean nor cv set is the
/// residual hop: it absorbs whatever mean and variance the target leaves
/// after every other term. Exactly one residual hop per plan.
struct HopBudget {
  HopId hop = HopId::SensorTx;
  std::optional<double> mean_s;
  std::optional<double> cv;

  bool residual() const noexcept { return !mean_s && !cv; }
};

struct CalibrationPlan {
  Scheme scheme = Scheme::Concatenated;
  MomentTarget target;
  QueueModel queue;
  std::vector<HopBudget> hops; // canonical order, uplink then downlink
  HopBudget render{HopId::Render, 0.6, 0.25};
};

/// Shipped plan for each scheme, targeting the measured E2E mean and SD.
CalibrationPlan default_plan(Scheme scheme);

/// Moment matching: every budgeted hop becomes a lognormal with its mean and
/// CV; the residual lognormal is solved so the summed analytic mean and
/// variance equal the target exactly. Throws Error{BadCalibration} when the
/// fixed budgets already exceed the target.
SchemeConfig fit_calibration(const CalibrationPlan& plan);

struct AnalyticMoments {
  double uplink_mean = 0.0;
  double queue_mean = 0.0;
  double downlink_mean = 0.0;
  double render_mean = 0.0;
  double mean = 0.0;
  double variance = 0.0;
};

/// Exact mean/variance of T_E2E implied by a config (ignores the
/// microsecond rounding, which shifts moments by well under 1e-6 s).
AnalyticMoments analytic_moments(const SchemeConfig& config);

} // namespace lpwan::sim
