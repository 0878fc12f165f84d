#include "lpwan/cli/manifest.hpp"

#include <fstream>

#include "lpwan/error.hpp"

namespace lpwan::cli {

void to_json(nlohmann::json& j, const RunManifest& m) {
  j = nlohmann::json{{"command", m.command},
                     {"parameters", m.parameters},
                     {"inputs", m.inputs},
                     {"outputs", m.outputs},
                     {"tool_version", m.tool_version}};
  j["seed"] = m.seed ? nlohmann::json(*m.seed) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, RunManifest& m) {
  j.at("command").get_to(m.command);
  m.parameters = j.value("parameters", nlohmann::json::object());
  if (j.contains("seed") && !j.at("seed").is_null()) m.seed = j.at("seed").get<std::uint64_t>();
  m.inputs = j.value("inputs", std::vector<std::string>{});
  m.outputs = j.value("outputs", std::vector<std::string>{});
  m.tool_version = j.value("tool_version", std::string{});
}

std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
  auto p = output;
  p += ".manifest.json";
  return p;
}

RunManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open manifest " + path.string());
  try {
    return nlohmann::json::parse(in).get<RunManifest>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidParameters, "malformed manifest " + path.string() + ": " + e.what());
  }
}

} // namespace lpwan::cli
