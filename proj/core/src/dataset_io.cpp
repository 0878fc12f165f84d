#include "lpwan/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "lpwan/error.hpp"
#include "lpwan/number_format.hpp"

namespace lpwan::io {
namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

[[noreturn]] void bad_row(std::size_t line, const std::string& reason) {
  throw DatasetError(ErrorCode::BadRow, line, reason);
}

std::optional<double> optional_seconds(std::string_view cell, std::size_t line,
                                       const char* column) {
  if (cell.empty()) return std::nullopt;
  const auto v = parse_double(cell);
  if (!v) bad_row(line, std::string(column) + " is not a number: '" + std::string(cell) + "'");
  if (*v < 0.0) bad_row(line, std::string(column) + " is negative");
  return v;
}

DatasetRecord parse_row(std::string_view line, std::size_t line_no, const ReadOptions& options) {
  const auto cells = split_commas(line);
  if (cells.size() != 7) {
    bad_row(line_no, "expected 7 columns, got " + std::to_string(cells.size()));
  }

  DatasetRecord r;
  const auto id = cells[0];
  const auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), r.sample_id);
  if (id.empty() || ec != std::errc{} || ptr != id.data() + id.size()) {
    bad_row(line_no, "sample_id is not a non-negative integer: '" + std::string(id) + "'");
  }
  if (cells[1].empty()) bad_row(line_no, "scheme tag is empty");
  r.scheme = std::string(cells[1]);

  r.t_ul_s = optional_seconds(cells[2], line_no, "t_ul_s");
  r.t_q_s = optional_seconds(cells[3], line_no, "t_q_s");
  r.t_dl_s = optional_seconds(cells[4], line_no, "t_dl_s");
  r.t_rend_s = optional_seconds(cells[5], line_no, "t_rend_s");

  const auto e2e = parse_double(cells[6]);
  if (!e2e) bad_row(line_no, "t_e2e_s is missing or not a number");
  if (!(*e2e > 0.0)) bad_row(line_no, "t_e2e_s must be positive");
  r.t_e2e_s = *e2e;

  if (r.has_components()) {
    const double sum = *r.t_ul_s + *r.t_q_s + *r.t_dl_s + *r.t_rend_s;
    if (std::abs(sum - r.t_e2e_s) > options.sum_tolerance_s) {
      bad_row(line_no, "components sum to " + format_fixed(sum, 9) + " but t_e2e_s is " +
                           format_fixed(r.t_e2e_s, 9));
    }
  }
  return r;
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

template <class Fn> std::size_t write_file(const std::filesystem::path& path, Fn&& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
  const std::size_t rows = body(out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write to " + path.string() + " failed");
  return rows;
}

} // namespace

std::vector<DatasetRecord> read_dataset(std::istream& in, const ReadOptions& options) {
  std::string line;
  if (!std::getline(in, line)) throw DatasetError(ErrorCode::BadHeader, 1, "file is empty");
  auto header = strip_cr(line);
  if (header.starts_with("\xEF\xBB\xBF")) header.remove_prefix(3);
  if (header != kDatasetHeader) {
    throw DatasetError(ErrorCode::BadHeader, 1,
                       "expected '" + std::string(kDatasetHeader) + "'");
  }

  std::vector<DatasetRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = strip_cr(line);
    if (row.empty()) continue;
    records.push_back(parse_row(row, line_no, options));
  }
  return records;
}

std::vector<DatasetRecord> read_dataset(const std::filesystem::path& path,
                                        const ReadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open " + path.string());
  return read_dataset(in, options);
}

std::size_t write_campaign(const sim::Campaign& campaign, std::ostream& out) {
  if (campaign.samples.empty()) throw Error(ErrorCode::ZeroSamples, "campaign is empty");
  const std::string tag(sim::to_string(campaign.scheme));
  out << kDatasetHeader << '\n';
  for (const auto& s : campaign.samples) {
    out << s.sequence_no << ',' << tag << ',' << format_fixed(s.t_ul, kSecondsDecimals) << ','
        << format_fixed(s.t_q, kSecondsDecimals) << ',' << format_fixed(s.t_dl, kSecondsDecimals)
        << ',' << format_fixed(s.t_rend, kSecondsDecimals) << ','
        << format_fixed(s.t_e2e(), kSecondsDecimals) << '\n';
  }
  if (!out) throw Error(ErrorCode::IoFailure, "campaign write failed");
  return campaign.samples.size();
}

std::size_t write_campaign(const sim::Campaign& campaign, const std::filesystem::path& path) {
  if (campaign.samples.empty()) throw Error(ErrorCode::ZeroSamples, "campaign is empty");
  return write_file(path, [&](std::ostream& out) { return write_campaign(campaign, out); });
}

std::size_t export_curve(std::span<const stats::CurvePoint> points, std::ostream& out) {
  const bool sorted = std::is_sorted(points.begin(), points.end(),
                                     [](const auto& a, const auto& b) { return a.t < b.t; });
  if (!sorted) throw Error(ErrorCode::UnsortedInput, "curve points must be ordered by t");
  out << kCurveHeader << '\n';
  for (const auto& p : points) {
    out << format_fixed(p.t, kSecondsDecimals) << ',' << format_general(p.value, 12) << '\n';
  }
  if (!out) throw Error(ErrorCode::IoFailure, "curve write failed");
  return points.size();
}

std::size_t export_curve(std::span<const stats::CurvePoint> points,
                         const std::filesystem::path& path) {
  const bool sorted = std::is_sorted(points.begin(), points.end(),
                                     [](const auto& a, const auto& b) { return a.t < b.t; });
  if (!sorted) throw Error(ErrorCode::UnsortedInput, "curve points must be ordered by t");
  return write_file(path, [&](std::ostream& out) { return export_curve(points, out); });
}

std::vector<double> e2e_values(std::span<const DatasetRecord> records) {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.t_e2e_s);
  return out;
}

std::map<std::string, std::vector<double>> e2e_by_scheme(std::span<const DatasetRecord> records) {
  std::map<std::string, std::vector<double>> groups;
  for (const auto& r : records) groups[r.scheme].push_back(r.t_e2e_s);
  return groups;
}

} // namespace lpwan::io
