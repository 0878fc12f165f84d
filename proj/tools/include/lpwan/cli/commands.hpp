#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

namespace lpwan::cli {

/// Runs the lpwan command line. `args[0]` is the program name. Returns the
/// process exit status: 0 on success, 1 on a runtime failure, 2 (or the
/// CLI11 code) on a usage error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// $LPWAN_CALIBRATION_DIR when set, otherwise the directory baked in at
/// build time.
std::filesystem::path default_calibration_dir();

std::string tool_version();

} // namespace lpwan::cli
