#include <iostream>
#include <string>
#include <vector>

#include "rlat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rlat::run(args, std::cout, std::cerr);
}
