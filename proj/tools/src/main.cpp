#include <iostream>
#include <string>
#include <vector>

#include "lpwan/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return lpwan::cli::run(args, std::cout, std::cerr);
}
