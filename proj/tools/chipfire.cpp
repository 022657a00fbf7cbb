#include <iostream>
#include <string>
#include <vector>

#include "chipfire/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return chipfire::run_cli(args, std::cout, std::cerr);
}
