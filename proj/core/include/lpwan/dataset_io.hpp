#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpwan/cdf.hpp"
#include "lpwan/pipeline_sim.hpp"

namespace lpwan::io {

// Latency dataset CSV (UTF-8, comma separated, LF line endings):
//
//   sample_id,scheme,t_ul_s,t_q_s,t_dl_s,t_rend_s,t_e2e_s
//   0,concat,1.812345,0.021000,0.751002,0.598765,3.183112
//
// Seconds with six decimals. Component cells may be empty; t_e2e_s is
// required and positive. When all four components are present they must
// sum to t_e2e_s within ReadOptions::sum_tolerance_s.
inline constexpr std::string_view kDatasetHeader =
    "sample_id,scheme,t_ul_s,t_q_s,t_dl_s,t_rend_s,t_e2e_s";
inline constexpr std::string_view kCurveHeader = "t_s,value";
inline constexpr int kSecondsDecimals = 6;

struct DatasetRecord {
  std::uint64_t sample_id = 0;
  std::string scheme; // carried verbatim
  std::optional<double> t_ul_s;
  std::optional<double> t_q_s;
  std::optional<double> t_dl_s;
  std::optional<double> t_rend_s;
  double t_e2e_s = 0.0;

  bool has_components() const noexcept { return t_ul_s && t_q_s && t_dl_s && t_rend_s; }
};

struct ReadOptions {
  double sum_tolerance_s = 1e-6;
};

/// Throws Error{MissingFile} or DatasetError{BadHeader | BadRow} carrying
/// the offending line number.
std::vector<DatasetRecord> read_dataset(const std::filesystem::path& path,
                                        const ReadOptions& options = {});
std::vector<DatasetRecord> read_dataset(std::istream& in, const ReadOptions& options = {});

/// Returns rows written. Throws Error{ZeroSamples} for an empty campaign
/// and Error{IoFailure} when the file cannot be written.
std::size_t write_campaign(const sim::Campaign& campaign, const std::filesystem::path& path);
std::size_t write_campaign(const sim::Campaign& campaign, std::ostream& out);

/// Two-column "t_s,value" CSV. Throws Error{UnsortedInput | IoFailure}.
std::size_t export_curve(std::span<const stats::CurvePoint> points,
                         const std::filesystem::path& path);
std::size_t export_curve(std::span<const stats::CurvePoint> points, std::ostream& out);

std::vector<double> e2e_values(std::span<const DatasetRecord> records);

/// t_e2e_s grouped by scheme tag, tags in sorted order.
std::map<std::string, std::vector<double>> e2e_by_scheme(std::span<const DatasetRecord> records);

} // namespace lpwan::io
