#include "lpwan/packet_codec.hpp"

#include <algorithm>

#include "lpwan/error.hpp"

namespace lpwan::codec {
namespace {

bool is_printable(char c) { return c >= 0x20 && c <= 0x7e; }
bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }

} // namespace

FieldBlock pack_fields(const SensorFields& fields) noexcept {
  FieldBlock block{};
  auto out = std::copy(fields.device_id.begin(), fields.device_id.end(), block.begin());
  out = std::copy(fields.auth_token.begin(), fields.auth_token.end(), out);
  std::copy(fields.sensor_states.begin(), fields.sensor_states.end(), out);
  return block;
}

SensorFields unpack_fields(const FieldBlock& block) noexcept {
  SensorFields fields;
  auto in = block.begin();
  std::copy_n(in, fields.device_id.size(), fields.device_id.begin());
  in += fields.device_id.size();
  std::copy_n(in, fields.auth_token.size(), fields.auth_token.begin());
  in += fields.auth_token.size();
  std::copy_n(in, fields.sensor_states.size(), fields.sensor_states.begin());
  return fields;
}

WireBuffer SensorPayload::serialize() const noexcept {
  WireBuffer out{};
  std::copy(label_.begin(), label_.end(), out.begin() + kLabelOffset);

  auto value = timestamp_;
  for (std::size_t i = 0; i < kTimestampSize; ++i) {
    out[kTimestampOffset + kTimestampSize - 1 - i] = static_cast<std::uint8_t>('0' + value % 10);
    value /= 10;
  }

  std::copy(fields_.begin(), fields_.end(), out.begin() + kFieldsOffset);
  out[kTerminatorOffset] = 0;
  return out;
}

SensorPayload build_payload(std::string_view label, std::int64_t timestamp,
                            std::span<const std::uint8_t> sensor_fields) {
  if (label.size() != kLabelSize) {
    throw Error(ErrorCode::LabelLength,
                "label must be 2 bytes, got " + std::to_string(label.size()));
  }
  if (!std::all_of(label.begin(), label.end(), is_printable)) {
    throw Error(ErrorCode::InvalidLabel, "label must be printable ASCII");
  }
  if (timestamp < 0 || timestamp > kMaxTimestamp) {
    throw Error(ErrorCode::TimestampRange,
                std::to_string(timestamp) + " does not fit 10 decimal digits");
  }
  if (sensor_fields.size() != kFieldBlockSize) {
    throw Error(ErrorCode::FieldBlockLength,
                "field block must be 15 bytes, got " + std::to_string(sensor_fields.size()));
  }

  SensorPayload p;
  std::copy(label.begin(), label.end(), p.label_.begin());
  p.timestamp_ = timestamp;
  std::copy(sensor_fields.begin(), sensor_fields.end(), p.fields_.begin());
  return p;
}

SensorPayload parse_payload(std::span<const std::uint8_t> bytes, std::string_view expected_label) {
  if (bytes.size() != kPayloadSize) {
    throw Error(ErrorCode::BadLength,
                "expected 28 bytes, got " + std::to_string(bytes.size()));
  }
  if (bytes[kTerminatorOffset] != 0) {
    throw Error(ErrorCode::BadTerminator, "byte 27 must be 0x00");
  }

  const auto label = bytes.subspan(kLabelOffset, kLabelSize);
  if (expected_label.size() != kLabelSize ||
      !std::equal(label.begin(), label.end(), expected_label.begin(),
                  [](std::uint8_t a, char b) { return a == static_cast<std::uint8_t>(b); })) {
    throw Error(ErrorCode::LabelMismatch, "label does not match expected tag");
  }

  const auto digits = bytes.subspan(kTimestampOffset, kTimestampSize);
  if (!std::all_of(digits.begin(), digits.end(), is_digit)) {
    throw Error(ErrorCode::BadTimestamp, "timestamp bytes must be ASCII digits");
  }
  std::int64_t timestamp = 0;
  for (auto d : digits) timestamp = timestamp * 10 + (d - '0');

  const std::string label_text(label.begin(), label.end());
  return build_payload(label_text, timestamp, bytes.subspan(kFieldsOffset, kFieldBlockSize));
}

double effective_data_rate_kbps(std::size_t payload_bytes,
                                std::chrono::duration<double> interval) {
  if (!(interval.count() > 0.0)) {
    throw Error(ErrorCode::NonPositiveInterval, "interval must be positive");
  }
  const double bits = static_cast<double>(payload_bytes) * 8.0;
  return bits / interval.count() / 1000.0;
}

} // namespace lpwan::codec
