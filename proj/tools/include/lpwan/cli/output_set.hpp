#pragma once

#include <filesystem>
#include <vector>

namespace lpwan::cli {

/// Tracks files written by one command. Unless commit() is called, the
/// destructor deletes them, so a failed run leaves no partial outputs.
class OutputSet {
public:
  OutputSet() = default;
  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;
  ~OutputSet();

  /// Registers `path` before it is written.
  const std::filesystem::path& add(std::filesystem::path path);
  void commit() noexcept { committed_ = true; }

  const std::vector<std::filesystem::path>& paths() const noexcept { return paths_; }

private:
  std::vector<std::filesystem::path> paths_;
  bool committed_ = false;
};

} // namespace lpwan::cli
