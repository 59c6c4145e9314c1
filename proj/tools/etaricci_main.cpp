#include <iostream>
#include <string>
#include <vector>

#include "etaricci/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return etaricci::run_cli(args, std::cout, std::cerr);
}
