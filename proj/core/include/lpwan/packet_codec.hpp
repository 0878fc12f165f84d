#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace lpwan::codec {

// Wire layout of the sensor payload (28 bytes, no alignment padding):
//
//   offset  size  field
//   ------  ----  ---------------------------------------------------
//        0     2  label, printable ASCII, compared byte-for-byte
//        2    10  Unix epoch seconds, ASCII decimal, zero-padded
//       12    15  sensor field block (see SensorFields)
//       12     4    device id
//       16     8    auth token
//       24     3    sensor states (occupancy bits)
//       27     1  terminator, always 0x00
inline constexpr std::size_t kPayloadSize = 28;
inline constexpr std::size_t kLabelSize = 2;
inline constexpr std::size_t kTimestampSize = 10;
inline constexpr std::size_t kFieldBlockSize = 15;
inline constexpr std::size_t kLabelOffset = 0;
inline constexpr std::size_t kTimestampOffset = kLabelOffset + kLabelSize;
inline constexpr std::size_t kFieldsOffset = kTimestampOffset + kTimestampSize;
inline constexpr std::size_t kTerminatorOffset = kFieldsOffset + kFieldBlockSize;
inline constexpr std::int64_t kMaxTimestamp = 9'999'999'999;

static_assert(kTerminatorOffset + 1 == kPayloadSize);

using WireBuffer = std::array<std::uint8_t, kPayloadSize>;
using FieldBlock = std::array<std::uint8_t, kFieldBlockSize>;

/// Codec-local sub-layout of the 15-byte field block.
struct SensorFields {
  std::array<std::uint8_t, 4> device_id{};
  std::array<std::uint8_t, 8> auth_token{};
  std::array<std::uint8_t, 3> sensor_states{};

  friend bool operator==(const SensorFields&, const SensorFields&) = default;
};

FieldBlock pack_fields(const SensorFields& fields) noexcept;
SensorFields unpack_fields(const FieldBlock& block) noexcept;

class SensorPayload {
public:
  std::string_view label() const noexcept { return {label_.data(), label_.size()}; }
  std::int64_t timestamp() const noexcept { return timestamp_; }
  const FieldBlock& fields() const noexcept { return fields_; }

  WireBuffer serialize() const noexcept;

  friend bool operator==(const SensorPayload&, const SensorPayload&) = default;

private:
  friend SensorPayload build_payload(std::string_view, std::int64_t,
                                     std::span<const std::uint8_t>);

  std::array<char, kLabelSize> label_{};
  std::int64_t timestamp_ = 0;
  FieldBlock fields_{};
};

/// Throws Error{LabelLength | InvalidLabel | TimestampRange | FieldBlockLength}.
SensorPayload build_payload(std::string_view label, std::int64_t timestamp,
                            std::span<const std::uint8_t> sensor_fields);

/// Validates a received frame the way the gateway does: length, terminator,
/// expected label, then timestamp digits. Throws Error{BadLength |
/// BadTerminator | LabelMismatch | BadTimestamp}.
SensorPayload parse_payload(std::span<const std::uint8_t> bytes, std::string_view expected_label);

/// payload_bytes * 8 / interval, in kilobits per second.
double effective_data_rate_kbps(std::size_t payload_bytes,
                                std::chrono::duration<double> interval);

} // namespace lpwan::codec
