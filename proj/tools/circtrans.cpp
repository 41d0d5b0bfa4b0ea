#include <iostream>

#include "circtrans/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return circtrans::run_cli(args, std::cout, std::cerr);
}
