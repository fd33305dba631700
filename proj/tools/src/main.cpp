#include <iostream>

#include "qgue_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qgue::cli::run(args, std::cout, std::cerr);
}
