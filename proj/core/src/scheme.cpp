#include "lpwan/scheme.hpp"

#include <array>

namespace lpwan::sim {
namespace {

constexpr std::array kUnlicensedUplink{HopId::SensorTx,      HopId::UnlicensedRadio,
                                       HopId::WlanUplink,    HopId::CarrierCore,
                                       HopId::BrokerForward, HopId::CoreIngest,
                                       HopId::DbWrite};
constexpr std::array kCellularUplink{HopId::SensorTx,      HopId::CellularUplink,
                                     HopId::CarrierCore,   HopId::BrokerForward,
                                     HopId::CoreIngest,    HopId::DbWrite};
constexpr std::array kConcatenatedUplink{HopId::SensorTx,       HopId::UnlicensedRadio,
                                         HopId::GatewaySerial,  HopId::CellularUplink,
                                         HopId::CarrierCore,    HopId::BrokerForward,
                                         HopId::CoreIngest,     HopId::DbWrite};
constexpr std::array kDownlink{HopId::ClientRequest, HopId::CoreResponse};

struct HopName {
  HopId id;
  std::string_view name;
};

constexpr std::array kHopNames{
    HopName{HopId::SensorTx, "SensorTx"},
    HopName{HopId::UnlicensedRadio, "UnlicensedRadio"},
    HopName{HopId::GatewaySerial, "GatewaySerial"},
    HopName{HopId::CellularUplink, "CellularUplink"},
    HopName{HopId::WlanUplink, "WlanUplink"},
    HopName{HopId::CarrierCore, "CarrierCore"},
    HopName{HopId::BrokerForward, "BrokerForward"},
    HopName{HopId::CoreIngest, "CoreIngest"},
    HopName{HopId::DbWrite, "DbWrite"},
    HopName{HopId::ClientRequest, "ClientRequest"},
    HopName{HopId::CoreResponse, "CoreResponse"},
    HopName{HopId::Render, "Render"},
};

} // namespace

std::string_view to_string(Scheme scheme) noexcept {
  switch (scheme) {
  case Scheme::StandaloneUnlicensed: return "unlicensed";
  case Scheme::StandaloneCellular: return "cellular";
  case Scheme::Concatenated: return "concat";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view tag) noexcept {
  if (tag == "unlicensed" || tag == "lora") return Scheme::StandaloneUnlicensed;
  if (tag == "cellular" || tag == "lte-m" || tag == "ltem") return Scheme::StandaloneCellular;
  if (tag == "concat" || tag == "concatenated") return Scheme::Concatenated;
  return std::nullopt;
}

std::string_view to_string(HopId hop) noexcept {
  for (const auto& entry : kHopNames) {
    if (entry.id == hop) return entry.name;
  }
  return "Unknown";
}

std::optional<HopId> parse_hop_id(std::string_view name) noexcept {
  for (const auto& entry : kHopNames) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

Segment segment_of(HopId hop) noexcept {
  switch (hop) {
  case HopId::ClientRequest:
  case HopId::CoreResponse: return Segment::Downlink;
  case HopId::Render: return Segment::Render;
  default: return Segment::Uplink;
  }
}

CanonicalPath canonical_hops(Scheme scheme) noexcept {
  switch (scheme) {
  case Scheme::StandaloneUnlicensed: return {kUnlicensedUplink, kDownlink, HopId::Render};
  case Scheme::StandaloneCellular: return {kCellularUplink, kDownlink, HopId::Render};
  case Scheme::Concatenated: break;
  }
  return {kConcatenatedUplink, kDownlink, HopId::Render};
}

} // namespace lpwan::sim
