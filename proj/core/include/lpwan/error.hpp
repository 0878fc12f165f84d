#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lpwan {

enum class ErrorCode {
  // packet_codec
  LabelLength,
  InvalidLabel,
  TimestampRange,
  FieldBlockLength,
  BadLength,
  BadTerminator,
  LabelMismatch,
  BadTimestamp,
  NonPositiveInterval,
  // pipeline_sim
  InvalidParameters,
  BadCalibration,
  ZeroSamples,
  // latency_stats
  EmptyInput,
  TooFewSamples,
  ZeroSpread,
  EmptyRange,
  ZeroBaseline,
  // dataset_io
  MissingFile,
  BadHeader,
  BadRow,
  IoFailure,
  UnsortedInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every library failure. `code()` identifies the
/// failure kind so callers can branch without parsing messages.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// A dataset row or header problem, tagged with the 1-based line number.
class DatasetError : public Error {
public:
  DatasetError(ErrorCode code, std::size_t line, const std::string& reason);

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

private:
  std::size_t line_;
  std::string reason_;
};

} // namespace lpwan
