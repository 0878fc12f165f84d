#include "lpwan/error.hpp"

namespace lpwan {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::LabelLength: return "LabelLength";
  case ErrorCode::InvalidLabel: return "InvalidLabel";
  case ErrorCode::TimestampRange: return "TimestampRange";
  case ErrorCode::FieldBlockLength: return "FieldBlockLength";
  case ErrorCode::BadLength: return "BadLength";
  case ErrorCode::BadTerminator: return "BadTerminator";
  case ErrorCode::LabelMismatch: return "LabelMismatch";
  case ErrorCode::BadTimestamp: return "BadTimestamp";
  case ErrorCode::NonPositiveInterval: return "NonPositiveInterval";
  case ErrorCode::InvalidParameters: return "InvalidParameters";
  case ErrorCode::BadCalibration: return "BadCalibration";
  case ErrorCode::ZeroSamples: return "ZeroSamples";
  case ErrorCode::EmptyInput: return "EmptyInput";
  case ErrorCode::TooFewSamples: return "TooFewSamples";
  case ErrorCode::ZeroSpread: return "ZeroSpread";
  case ErrorCode::EmptyRange: return "EmptyRange";
  case ErrorCode::ZeroBaseline: return "ZeroBaseline";
  case ErrorCode::MissingFile: return "MissingFile";
  case ErrorCode::BadHeader: return "BadHeader";
  case ErrorCode::BadRow: return "BadRow";
  case ErrorCode::IoFailure: return "IoFailure";
  case ErrorCode::UnsortedInput: return "UnsortedInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

DatasetError::DatasetError(ErrorCode code, std::size_t line, const std::string& reason)
    : Error(code, "line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

} // namespace lpwan
