#include <iostream>

#include "dlga_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dlga::cli::run(args, std::cout, std::cerr);
}
