#include <iostream>
#include <string>
#include <vector>

#include "yoke/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return yoke::cli::run(args, std::cout, std::cerr);
}
