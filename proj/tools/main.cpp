#include <iostream>
#include <string>
#include <vector>

#include "vgt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vgt::cli_dispatch(args, std::cout, std::cerr);
}
