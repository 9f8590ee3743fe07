#include <iostream>
#include <string>
#include <vector>

#include "spinext/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spinext::cli::run(args, std::cout, std::cerr);
}
