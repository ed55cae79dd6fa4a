#include <iostream>

#include "imult/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return imult::run_cli(args, std::cout, std::cerr);
}
