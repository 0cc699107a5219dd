#include <iostream>
#include <string>
#include <vector>

#include "jacobi2d/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return jacobi2d::cli::main_entry(args, std::cout, std::cerr);
}
