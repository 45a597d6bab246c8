#include <iostream>
#include <string>
#include <vector>

#include "accyc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return accyc::run_cli(args, std::cout, std::cerr);
}
