#include <iostream>
#include <string>
#include <vector>

#include "heron/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return heron::cli::run(args, std::cout, std::cerr);
}
