#include <iostream>
#include <string>
#include <vector>

#include "chainconic/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chainconic::cli::run(args, std::cin, std::cout, std::cerr);
}
