#include <iostream>

#include "lcseq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcseq::run_cli(args, std::cout, std::cerr);
}
