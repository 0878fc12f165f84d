#include <gtest/gtest.h>

#include <random>
#include <string>

#include "lpwan/error.hpp"
#include "lpwan/packet_codec.hpp"
#include "support/expect_error.hpp"

namespace lpwan::codec {
namespace {

using namespace std::chrono_literals;
using test::code_of;

std::array<std::uint8_t, kFieldBlockSize> zero_fields() { return {}; }

TEST(PacketCodec, BuildsDocumentedLayout) {
  const auto p = build_payload("PK", 1612345678, zero_fields());
  const auto wire = p.serialize();

  ASSERT_EQ(wire.size(), 28u);
  const std::string head(wire.begin(), wire.begin() + 12);
  EXPECT_EQ(head, "PK1612345678");
  for (std::size_t i = 12; i < 28; ++i) EXPECT_EQ(wire[i], 0) << "byte " << i;
}

TEST(PacketCodec, ZeroTimestampIsZeroPadded) {
  const auto wire = build_payload("AA", 0, zero_fields()).serialize();
  EXPECT_EQ(std::string(wire.begin() + 2, wire.begin() + 12), "0000000000");
}

TEST(PacketCodec, BuildRejectsBadInputs) {
  const auto fields = zero_fields();
  EXPECT_EQ(code_of([&] { build_payload("PK", 10'000'000'000, fields); }), ErrorCode::TimestampRange);
  EXPECT_EQ(code_of([&] { build_payload("PK", -1, fields); }), ErrorCode::TimestampRange);
  EXPECT_EQ(code_of([&] { build_payload("P", 1, fields); }), ErrorCode::LabelLength);
  EXPECT_EQ(code_of([&] { build_payload("PKX", 1, fields); }), ErrorCode::LabelLength);
  EXPECT_EQ(code_of([&] { build_payload("P\n", 1, fields); }), ErrorCode::InvalidLabel);

  const std::array<std::uint8_t, 14> short_block{};
  EXPECT_EQ(code_of([&] { build_payload("PK", 1, short_block); }), ErrorCode::FieldBlockLength);
}

TEST(PacketCodec, MaxTimestampFits) {
  const auto wire = build_payload("PK", kMaxTimestamp, zero_fields()).serialize();
  EXPECT_EQ(std::string(wire.begin() + 2, wire.begin() + 12), "9999999999");
}

TEST(PacketCodec, ParseRoundTripsAndChecksLabel) {
  const auto p = build_payload("PK", 1612345678, zero_fields());
  const auto wire = p.serialize();
  EXPECT_EQ(parse_payload(wire, "PK"), p);
  EXPECT_EQ(code_of([&] { parse_payload(wire, "XY"); }), ErrorCode::LabelMismatch);
  EXPECT_EQ(code_of([&] { parse_payload(wire, "pk"); }), ErrorCode::LabelMismatch);
}

TEST(PacketCodec, ParseRejectsMalformedFrames) {
  auto wire = build_payload("PK", 1612345678, zero_fields()).serialize();

  EXPECT_EQ(code_of([&] { parse_payload(std::span(wire).first(27), "PK"); }), ErrorCode::BadLength);

  auto bad_term = wire;
  bad_term[27] = 1;
  EXPECT_EQ(code_of([&] { parse_payload(bad_term, "PK"); }), ErrorCode::BadTerminator);

  auto bad_digit = wire;
  bad_digit[5] = 'x';
  EXPECT_EQ(code_of([&] { parse_payload(bad_digit, "PK"); }), ErrorCode::BadTimestamp);
}

TEST(PacketCodec, FieldSubLayout) {
  SensorFields f;
  f.device_id = {1, 2, 3, 4};
  f.auth_token = {10, 11, 12, 13, 14, 15, 16, 17};
  f.sensor_states = {0b1010, 0, 0xff};
  const auto block = pack_fields(f);
  EXPECT_EQ(block[0], 1);
  EXPECT_EQ(block[4], 10);
  EXPECT_EQ(block[12], 0b1010);
  EXPECT_EQ(unpack_fields(block), f);

  const auto wire = build_payload("PK", 1, block).serialize();
  EXPECT_EQ(wire[kFieldsOffset + 4], 10);
}

TEST(PacketCodec, RandomPayloadsRoundTrip) {
  std::mt19937_64 gen(2021);
  std::uniform_int_distribution<int> printable(0x20, 0x7e);
  std::uniform_int_distribution<std::int64_t> ts(0, kMaxTimestamp);
  std::uniform_int_distribution<int> byte(0, 255);

  for (int i = 0; i < 2000; ++i) {
    const std::string label{static_cast<char>(printable(gen)), static_cast<char>(printable(gen))};
    FieldBlock fields;
    for (auto& b : fields) b = static_cast<std::uint8_t>(byte(gen));
    const auto p = build_payload(label, ts(gen), fields);
    const auto wire = p.serialize();
    ASSERT_EQ(wire.size(), kPayloadSize);
    ASSERT_EQ(wire[27], 0);
    ASSERT_EQ(parse_payload(wire, label), p);
  }
}

TEST(PacketCodec, EffectiveDataRate) {
  EXPECT_EQ(effective_data_rate_kbps(28, 500ms), 0.448);
  EXPECT_EQ(effective_data_rate_kbps(0, 500ms), 0.0);
  EXPECT_DOUBLE_EQ(effective_data_rate_kbps(125, 1s), 125.0 * 8.0 / 1000.0);
  // linear in bytes, inverse in interval
  EXPECT_DOUBLE_EQ(effective_data_rate_kbps(56, 500ms), 2 * effective_data_rate_kbps(28, 500ms));
  EXPECT_DOUBLE_EQ(effective_data_rate_kbps(28, 1000ms), effective_data_rate_kbps(28, 500ms) / 2);
  EXPECT_EQ(code_of([] { effective_data_rate_kbps(28, 0ms); }), ErrorCode::NonPositiveInterval);
  EXPECT_EQ(code_of([] { effective_data_rate_kbps(28, -5ms); }), ErrorCode::NonPositiveInterval);
}

} // namespace
} // namespace lpwan::codec
