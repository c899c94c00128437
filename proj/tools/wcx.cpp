#include <iostream>
#include <vector>

#include "wcx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wcx::run_cli(std::move(args), std::cout, std::cerr);
}
