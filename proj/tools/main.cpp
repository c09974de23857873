#include <iostream>
#include <string>
#include <vector>

#include "ehrtensor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ehrtensor::run_command_line(args, std::cin, std::cout, std::cerr);
}
