#include <iostream>
#include <string>
#include <vector>

#include "lazycone/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lazycone::run_cli(std::move(args), std::cout, std::cerr);
}
