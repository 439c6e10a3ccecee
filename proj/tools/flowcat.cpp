#include <iostream>
#include <string>
#include <vector>

#include "flowcat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return flowcat::run_cli(args, std::cout, std::cerr);
}
