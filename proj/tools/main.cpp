#include <iostream>
#include <string>
#include <vector>

#include "delorder/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return delorder::run_cli(args, std::cout, std::cerr);
}
