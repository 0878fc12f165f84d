#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lpwan::cli {

/// Written next to every primary output as "<output>.manifest.json".
/// Contains no wall-clock data so reruns produce identical manifests.
struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::string tool_version;
};

void to_json(nlohmann::json& j, const RunManifest& m);
void from_json(const nlohmann::json& j, RunManifest& m);

std::filesystem::path manifest_path_for(const std::filesystem::path& output);

RunManifest load_manifest(const std::filesystem::path& path);

} // namespace lpwan::cli
