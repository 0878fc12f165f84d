// Regenerates the shipped per-scheme calibration files from the
// moment-matching plans in lpwan::sim::default_plan().
//
//   lpwan-calibrate --out-dir calibration          # rewrite files
//   lpwan-calibrate --out-dir calibration --check  # exit 1 if stale

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lpwan/calibration.hpp"
#include "lpwan/error.hpp"
#include "lpwan/number_format.hpp"

namespace {

using namespace lpwan;

std::string render_file(const sim::CalibrationPlan& plan, const sim::SchemeConfig& config) {
  const auto m = sim::analytic_moments(config);
  std::ostringstream out;
  out << "# " << sim::to_string(plan.scheme) << " scheme calibration, generated by lpwan-calibrate.\n"
      << "# Target E2E mean " << format_fixed(plan.target.mean_s, 4) << " s, SD "
      << format_fixed(plan.target.sd_s, 4) << " s.\n"
      << "# Analytic means: T_UL " << format_fixed(m.uplink_mean, 4) << " s, T_Q "
      << format_fixed(m.queue_mean, 4) << " s, T_DL " << format_fixed(m.downlink_mean, 4)
      << " s, T_REND " << format_fixed(m.render_mean, 4) << " s.\n";
  sim::write_scheme_config(out, config);
  return out.str();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerate per-scheme latency calibration files", "lpwan-calibrate"};
  std::string out_dir = "calibration";
  bool check = false;
  app.add_option("--out-dir", out_dir, "Directory for <scheme>.cal files")->capture_default_str();
  app.add_flag("--check", check, "Verify existing files instead of writing");
  CLI11_PARSE(app, argc, argv);

  int status = 0;
  try {
    std::filesystem::create_directories(out_dir);
    for (const auto scheme : sim::kAllSchemes) {
      const auto plan = sim::default_plan(scheme);
      const auto config = sim::fit_calibration(plan);
      const auto text = render_file(plan, config);
      const auto path = sim::calibration_file(out_dir, scheme);

      if (check) {
        if (slurp(path) != text) {
          std::cerr << path.string() << " is stale\n";
          status = 1;
        }
        continue;
      }
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      out << text;
      if (!out) {
        std::cerr << "cannot write " << path.string() << '\n';
        return 1;
      }
      const auto m = sim::analytic_moments(config);
      std::cout << path.string() << ": mean " << format_fixed(m.mean, 4) << " s, sd "
                << format_fixed(std::sqrt(m.variance), 4) << " s\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return status;
}
