#include <iostream>
#include <string>
#include <vector>

#include "froblab/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return froblab::run_command(args, std::cout, std::cerr);
}
