#include <iostream>
#include <string>
#include <vector>

#include "lipi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lipi::cli::run(args, std::cout, std::cerr);
}
