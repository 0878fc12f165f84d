#include "lpwan/cli/output_set.hpp"

namespace lpwan::cli {

OutputSet::~OutputSet() {
  if (committed_) return;
  for (const auto& p : paths_) {
    std::error_code ec;
    std::filesystem::remove(p, ec);
  }
}

const std::filesystem::path& OutputSet::add(std::filesystem::path path) {
  paths_.push_back(std::move(path));
  return paths_.back();
}

} // namespace lpwan::cli
