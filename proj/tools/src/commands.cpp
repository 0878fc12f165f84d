#include "lpwan/cli/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lpwan/calibration.hpp"
#include "lpwan/cdf.hpp"
#include "lpwan/dataset_io.hpp"
#include "lpwan/density.hpp"
#include "lpwan/error.hpp"
#include "lpwan/latency_stats.hpp"
#include "lpwan/number_format.hpp"
#include "lpwan/packet_codec.hpp"
#include "lpwan/pipeline_sim.hpp"
#include "lpwan/stats_json.hpp"
#include "lpwan/cli/manifest.hpp"
#include "lpwan/cli/output_set.hpp"

namespace lpwan::cli {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::size_t kDefaultCurvePoints = 1024;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_json_file(const fs::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::IoFailure, "write to " + path.string() + " failed");
}

/// "pdf.csv" -> "pdf.kde.csv"
fs::path kde_sibling(const fs::path& path) {
  auto p = path;
  p.replace_extension();
  p += ".kde";
  p += path.extension().empty() ? fs::path(".csv") : path.extension();
  return p;
}

std::vector<std::string> to_strings(const std::vector<fs::path>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(p.string());
  return out;
}

void write_manifest(OutputSet& outputs, const fs::path& primary, RunManifest manifest) {
  const auto manifest_path = manifest_path_for(primary);
  manifest.outputs = to_strings(outputs.paths());
  manifest.outputs.push_back(manifest_path.string());
  manifest.tool_version = tool_version();
  outputs.add(manifest_path);
  write_json_file(manifest_path, manifest);
}

// ---------------------------------------------------------------- analysis

struct Analysis {
  std::string name;
  fs::path path;
  stats::SummaryStats summary;
  std::optional<stats::DensityEstimate> density;
};

std::vector<double> select_scheme(const fs::path& path, const std::vector<io::DatasetRecord>& records,
                                  const std::string& scheme_filter, std::string& name) {
  auto groups = io::e2e_by_scheme(records);
  if (groups.empty()) {
    throw Error(ErrorCode::EmptyInput, path.string() + " has no data rows");
  }
  if (!scheme_filter.empty()) {
    auto it = groups.find(scheme_filter);
    if (it == groups.end()) {
      throw Error(ErrorCode::EmptyInput,
                  path.string() + " has no rows for scheme '" + scheme_filter + "'");
    }
    name = it->first;
    return std::move(it->second);
  }
  if (groups.size() > 1) {
    throw UsageError(path.string() + " mixes " + std::to_string(groups.size()) +
                     " scheme tags; pick one with --scheme");
  }
  name = groups.begin()->first;
  return std::move(groups.begin()->second);
}

Analysis analyze_file(const fs::path& path, const std::string& scheme_filter, std::size_t bins) {
  const auto records = io::read_dataset(path);
  Analysis a;
  a.path = path;
  auto e2e = select_scheme(path, records, scheme_filter, a.name);
  a.summary = stats::summarize(e2e);
  a.density = stats::DensityEstimate::from_samples(std::move(e2e), bins);
  return a;
}

json qoe_json(const stats::DensityEstimate& density, const std::vector<double>& targets,
              double threshold) {
  json reports = json::array();
  for (double t : targets) reports.push_back(stats::qoe_probability(density, t, threshold));
  return reports;
}

// ---------------------------------------------------------------- simulate

struct SimulateOptions {
  std::string scheme;
  std::size_t samples = sim::kDefaultSampleCount;
  std::uint64_t seed = 42;
  double interval_ms = 500.0;
  std::string calibration;
  std::string out;
  std::string from_manifest;
};

int cmd_simulate(const SimulateOptions& opt, bool as_json, std::ostream& out) {
  SimulateOptions o = opt;
  std::optional<sim::SchemeConfig> config;
  std::string calibration_source;

  if (!o.from_manifest.empty()) {
    const auto m = load_manifest(o.from_manifest);
    if (m.command != "simulate") throw UsageError("manifest is not from a simulate run");
    const auto& p = m.parameters;
    o.scheme = p.at("scheme").get<std::string>();
    o.samples = p.at("samples").get<std::size_t>();
    o.interval_ms = p.at("interval_ms").get<double>();
    o.seed = m.seed.value_or(o.seed);
    if (o.out.empty()) o.out = p.at("out").get<std::string>();
    std::istringstream text(p.at("calibration").get<std::string>());
    config = sim::read_scheme_config(text);
    calibration_source = p.value("calibration_path", std::string{});
  }

  if (o.out.empty()) throw UsageError("--out is required");
  const auto scheme = sim::parse_scheme(o.scheme);
  if (!scheme) throw UsageError("unknown scheme '" + o.scheme + "' (use unlicensed|cellular|concat)");
  if (o.samples == 0) throw UsageError("--samples must be at least 1");
  if (!(o.interval_ms > 0.0)) throw UsageError("--interval-ms must be positive");

  if (!config) {
    const fs::path cal_path = o.calibration.empty()
                                  ? sim::calibration_file(default_calibration_dir(), *scheme)
                                  : fs::path(o.calibration);
    config = sim::load_scheme_config(cal_path);
    calibration_source = cal_path.string();
  }
  if (config->scheme != *scheme) {
    throw UsageError("calibration is for scheme '" + std::string(sim::to_string(config->scheme)) +
                     "', not '" + std::string(sim::to_string(*scheme)) + "'");
  }

  const std::chrono::duration<double, std::milli> interval(o.interval_ms);
  const auto campaign = sim::run_campaign(*config, o.samples, o.seed, interval);

  OutputSet outputs;
  const fs::path csv = outputs.add(o.out);
  const auto rows = io::write_campaign(campaign, csv);

  RunManifest manifest;
  manifest.command = "simulate";
  manifest.seed = o.seed;
  manifest.parameters = {{"scheme", std::string(sim::to_string(*scheme))},
                         {"samples", o.samples},
                         {"interval_ms", o.interval_ms},
                         {"out", o.out},
                         {"calibration_path", calibration_source},
                         {"calibration", sim::to_text(*config)}};
  if (!calibration_source.empty()) manifest.inputs.push_back(calibration_source);
  write_manifest(outputs, csv, manifest);
  outputs.commit();

  const auto e2e = campaign.e2e();
  const double rate = codec::effective_data_rate_kbps(codec::kPayloadSize, interval);
  if (as_json) {
    out << json{{"rows", rows},
                {"out", o.out},
                {"manifest", manifest_path_for(csv).string()},
                {"mean_s", stats::mean(e2e)},
                {"data_rate_kbps", rate}}
               .dump(2)
        << '\n';
  } else {
    out << "simulated " << rows << " " << sim::to_string(*scheme) << " packets (seed " << o.seed
        << ", " << format_fixed(rate, 3) << " kbps payload rate) -> " << o.out << '\n'
        << "mean E2E latency " << format_fixed(stats::mean(e2e), 4) << " s\n";
  }
  return 0;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeOptions {
  std::string in;
  std::string scheme;
  std::size_t bins = stats::kDefaultBins;
  std::size_t grid = kDefaultCurvePoints;
  std::string out_stats;
  std::string out_pdf;
  std::string out_cdf;
};

int cmd_analyze(const AnalyzeOptions& o, bool as_json, std::ostream& out) {
  if (o.bins == 0) throw UsageError("--bins must be at least 1");
  if (o.grid < 2) throw UsageError("--grid must be at least 2");
  const auto a = analyze_file(o.in, o.scheme, o.bins);
  const auto& density = *a.density;

  OutputSet outputs;
  const fs::path stats_path = outputs.add(o.out_stats);
  write_json_file(stats_path, json(a.summary));

  const auto grid = stats::curve_grid(density, o.grid);
  if (!o.out_pdf.empty()) {
    io::export_curve(stats::histogram_curve(density.histogram()), outputs.add(o.out_pdf));
    io::export_curve(stats::kde_pdf_curve(density, grid), outputs.add(kde_sibling(o.out_pdf)));
  }
  if (!o.out_cdf.empty()) {
    io::export_curve(stats::empirical_cdf_curve(density, grid), outputs.add(o.out_cdf));
    io::export_curve(stats::kde_cdf_curve(density, grid), outputs.add(kde_sibling(o.out_cdf)));
  }

  RunManifest manifest;
  manifest.command = "analyze";
  manifest.parameters = {{"in", o.in}, {"scheme", a.name}, {"bins", o.bins}, {"grid", o.grid}};
  manifest.inputs = {o.in};
  write_manifest(outputs, stats_path, manifest);
  outputs.commit();

  if (as_json) {
    out << json{{"scheme", a.name}, {"stats", a.summary}, {"outputs", to_strings(outputs.paths())}}
               .dump(2)
        << '\n';
  } else {
    const auto& s = a.summary;
    out << a.name << ": n=" << s.n << " mean=" << format_fixed(s.mean, 4)
        << " s sd=" << format_fixed(s.sd, 4) << " s mad=" << format_fixed(s.mad, 4)
        << " s h=" << format_fixed(s.bandwidth, 4) << " kde_sd=" << format_fixed(s.kde_sd, 4)
        << " s\n";
  }
  return 0;
}

// ----------------------------------------------------------------- compare

struct CompareOptions {
  std::vector<std::string> in;
  std::vector<double> targets;
  std::size_t bins = stats::kDefaultBins;
  double threshold = stats::kQoeThreshold;
  std::string out;
};

int cmd_compare(const CompareOptions& o, bool as_json, std::ostream& out) {
  if (o.in.size() < 2 || o.in.size() > 3) throw UsageError("compare needs 2 or 3 --in datasets");
  const std::vector<double> targets = o.targets.empty() ? std::vector<double>{3.0} : o.targets;

  std::vector<std::future<Analysis>> jobs;
  for (const auto& path : o.in) {
    jobs.push_back(std::async(std::launch::async,
                              [path, bins = o.bins] { return analyze_file(path, "", bins); }));
  }
  std::vector<Analysis> analyses;
  for (auto& j : jobs) analyses.push_back(j.get());

  json datasets = json::array();
  for (const auto& a : analyses) {
    datasets.push_back({{"name", a.name},
                        {"path", a.path.string()},
                        {"stats", a.summary},
                        {"qoe", qoe_json(*a.density, targets, o.threshold)}});
  }

  json pairs = json::array();
  for (std::size_t i = 0; i < analyses.size(); ++i) {
    for (std::size_t j = i + 1; j < analyses.size(); ++j) {
      const auto& a = analyses[i];
      const auto& b = analyses[j];
      const auto excess = stats::excess_latency(a.summary, b.summary);
      const auto crossings = stats::cdf_intersections(*a.density, *b.density);
      pairs.push_back({{"a", a.name},
                       {"b", b.name},
                       {"excess_s", excess.seconds},
                       {"excess_pct", excess.percent},
                       {"intersections", crossings}});
    }
  }

  const json result{{"targets_s", targets}, {"datasets", datasets}, {"pairs", pairs}};

  OutputSet outputs;
  const fs::path out_path = outputs.add(o.out);
  write_json_file(out_path, result);
  RunManifest manifest;
  manifest.command = "compare";
  manifest.parameters = {{"in", o.in}, {"targets_s", targets}, {"bins", o.bins},
                         {"threshold", o.threshold}};
  manifest.inputs = o.in;
  write_manifest(outputs, out_path, manifest);
  outputs.commit();

  if (as_json) {
    out << result.dump(2) << '\n';
  } else {
    for (const auto& p : pairs) {
      out << p["a"].get<std::string>() << " vs " << p["b"].get<std::string>() << ": excess "
          << format_fixed(p["excess_s"].get<double>(), 4) << " s ("
          << format_fixed(p["excess_pct"].get<double>(), 1) << "%), "
          << p["intersections"]["crossings"].size() << " CDF crossing(s)\n";
    }
    for (const auto& d : datasets) {
      for (const auto& r : d["qoe"]) {
        out << d["name"].get<std::string>() << ": P(T <= "
            << format_fixed(r["target_s"].get<double>(), 3)
            << " s) = " << format_fixed(r["probability_empirical"].get<double>(), 4) << '\n';
      }
    }
  }
  return 0;
}

// --------------------------------------------------------------------- qoe

struct QoeOptions {
  std::string in;
  std::string scheme;
  std::vector<double> targets;
  double threshold = stats::kQoeThreshold;
  std::string out;
};

int cmd_qoe(const QoeOptions& o, bool as_json, std::ostream& out) {
  if (o.targets.empty()) throw UsageError("qoe needs at least one --target");
  if (!(o.threshold >= 0.0 && o.threshold <= 1.0)) throw UsageError("--threshold must be in [0, 1]");
  const auto a = analyze_file(o.in, o.scheme, stats::kDefaultBins);

  const json result{{"scheme", a.name},
                    {"path", o.in},
                    {"n", a.summary.n},
                    {"reports", qoe_json(*a.density, o.targets, o.threshold)}};

  OutputSet outputs;
  const fs::path out_path = outputs.add(o.out);
  write_json_file(out_path, result);
  RunManifest manifest;
  manifest.command = "qoe";
  manifest.parameters = {{"in", o.in}, {"scheme", a.name}, {"targets_s", o.targets},
                         {"threshold", o.threshold}};
  manifest.inputs = {o.in};
  write_manifest(outputs, out_path, manifest);
  outputs.commit();

  if (as_json) {
    out << result.dump(2) << '\n';
  } else {
    for (const auto& r : result["reports"]) {
      out << a.name << ": P(T <= " << format_fixed(r["target_s"].get<double>(), 3)
          << " s) = " << format_fixed(r["probability_empirical"].get<double>(), 4)
          << " (kde " << format_fixed(r["probability_kde"].get<double>(), 4) << ") "
          << (r["meets_threshold"].get<bool>() ? "meets" : "below") << " QoE threshold "
          << format_fixed(o.threshold, 2) << '\n';
    }
  }
  return 0;
}

} // namespace

std::string tool_version() { return LPWAN_VERSION; }

fs::path default_calibration_dir() {
  if (const char* env = std::getenv("LPWAN_CALIBRATION_DIR"); env && *env) return env;
  return LPWAN_DEFAULT_CALIBRATION_DIR;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulate and analyse end-to-end latency of standalone and concatenated LPWANs",
               "lpwan"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a machine-readable JSON result on stdout");

  SimulateOptions sim_opt;
  auto* simulate = app.add_subcommand("simulate", "Run a seeded latency campaign for one scheme");
  simulate->add_option("--scheme", sim_opt.scheme, "unlicensed | cellular | concat");
  simulate->add_option("--samples", sim_opt.samples, "Number of packets")->capture_default_str();
  simulate->add_option("--seed", sim_opt.seed, "RNG seed")->capture_default_str();
  simulate->add_option("--interval-ms", sim_opt.interval_ms, "Packet period in ms")
      ->capture_default_str();
  simulate->add_option("--calibration", sim_opt.calibration,
                       "Calibration file (default: <calibration dir>/<scheme>.cal)");
  simulate->add_option("--out", sim_opt.out, "Campaign CSV path");
  simulate->add_option("--from-manifest", sim_opt.from_manifest,
                       "Re-run the simulate invocation recorded in a manifest");
  simulate->add_flag("--json", as_json);

  AnalyzeOptions an_opt;
  auto* analyze = app.add_subcommand("analyze", "Summary statistics, histogram and KDE curves");
  analyze->add_option("--in", an_opt.in, "Dataset CSV")->required();
  analyze->add_option("--scheme", an_opt.scheme, "Scheme tag to select from a mixed dataset");
  analyze->add_option("--bins", an_opt.bins, "Histogram bins")->capture_default_str();
  analyze->add_option("--grid", an_opt.grid, "KDE / CDF curve points")->capture_default_str();
  analyze->add_option("--out-stats", an_opt.out_stats, "Summary statistics JSON")->required();
  analyze->add_option("--out-pdf", an_opt.out_pdf,
                      "Histogram CSV; the KDE curve goes to the '.kde' sibling");
  analyze->add_option("--out-cdf", an_opt.out_cdf,
                      "Empirical CDF CSV; the KDE CDF goes to the '.kde' sibling");
  analyze->add_flag("--json", as_json);

  CompareOptions cmp_opt;
  auto* compare = app.add_subcommand("compare", "Excess latency, CDF crossings and QoE across schemes");
  compare->add_option("--in", cmp_opt.in, "Dataset CSV (2 or 3 times)")->required();
  compare->add_option("--target", cmp_opt.targets, "QoE latency target in seconds (repeatable)");
  compare->add_option("--bins", cmp_opt.bins, "Histogram bins")->capture_default_str();
  compare->add_option("--threshold", cmp_opt.threshold, "QoE probability floor")
      ->capture_default_str();
  compare->add_option("--out", cmp_opt.out, "Comparison JSON")->required();
  compare->add_flag("--json", as_json);

  QoeOptions qoe_opt;
  auto* qoe = app.add_subcommand("qoe", "Probability of meeting latency targets");
  qoe->add_option("--in", qoe_opt.in, "Dataset CSV")->required();
  qoe->add_option("--scheme", qoe_opt.scheme, "Scheme tag to select from a mixed dataset");
  qoe->add_option("--target", qoe_opt.targets, "Latency target in seconds (repeatable)")
      ->required();
  qoe->add_option("--threshold", qoe_opt.threshold, "QoE probability floor")
      ->capture_default_str();
  qoe->add_option("--out", qoe_opt.out, "QoE report JSON")->required();
  qoe->add_flag("--json", as_json);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (simulate->parsed()) {
      if (sim_opt.scheme.empty() && sim_opt.from_manifest.empty()) {
        throw UsageError("--scheme or --from-manifest is required");
      }
      return cmd_simulate(sim_opt, as_json, out);
    }
    if (analyze->parsed()) return cmd_analyze(an_opt, as_json, out);
    if (compare->parsed()) return cmd_compare(cmp_opt, as_json, out);
    if (qoe->parsed()) return cmd_qoe(qoe_opt, as_json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

} // namespace lpwan::cli
