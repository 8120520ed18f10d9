#include <iostream>
#include <string>
#include <vector>

#include "gcut/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gcut::run_cli(args, std::cout, std::cerr);
}
