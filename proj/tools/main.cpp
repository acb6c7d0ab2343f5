#include <iostream>
#include <string>
#include <vector>

#include "bimagic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bimagic::run_cli(args, std::cin, std::cout, std::cerr);
}
