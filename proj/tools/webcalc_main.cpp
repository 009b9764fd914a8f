#include <iostream>

#include "webcalc/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return webcalc::cli::run(args, std::cout, std::cerr);
}
