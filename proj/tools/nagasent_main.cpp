#include <iostream>
#include <string>
#include <vector>

#include "nagasent/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nagasent::cli::run(args, std::cin, std::cout, std::cerr);
}
