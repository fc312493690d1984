#include <iostream>

#include "stix_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stix::cli::run(args, std::cout, std::cerr);
}
