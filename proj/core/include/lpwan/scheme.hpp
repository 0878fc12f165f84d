#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace lpwan::sim {

enum class Scheme {
  StandaloneUnlicensed, // LoRa over WLAN to the ISP
  StandaloneCellular,   // LTE-M straight to the carrier
  Concatenated,         // LoRa to a gateway, serial hand-off, LTE-M backhaul
};

inline constexpr Scheme kAllSchemes[] = {Scheme::StandaloneUnlicensed,
                                         Scheme::StandaloneCellular, Scheme::Concatenated};

enum class HopId {
  SensorTx,
  UnlicensedRadio,
  GatewaySerial,
  CellularUplink,
  WlanUplink,
  CarrierCore,
  BrokerForward,
  CoreIngest,
  DbWrite,
  ClientRequest,
  CoreResponse,
  Render,
};

enum class Segment { Uplink, Downlink, Render };

/// Canonical tag used in files and on the command line: "unlicensed",
/// "cellular" or "concat".
std::string_view to_string(Scheme scheme) noexcept;

/// Accepts the canonical tags plus the aliases "lora", "lte-m", "ltem" and
/// "concatenated".
std::optional<Scheme> parse_scheme(std::string_view tag) noexcept;

std::string_view to_string(HopId hop) noexcept;
std::optional<HopId> parse_hop_id(std::string_view name) noexcept;

Segment segment_of(HopId hop) noexcept;

/// Ordered hop path of one scheme. Uplink hops feed T_UL, downlink hops
/// T_DL and the render hop T_REND.
struct CanonicalPath {
  std::span<const HopId> uplink;
  std::span<const HopId> downlink;
  HopId render;
};

CanonicalPath canonical_hops(Scheme scheme) noexcept;

} // namespace lpwan::sim
