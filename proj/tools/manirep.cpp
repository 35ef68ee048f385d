#include <iostream>

#include "manirep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return manirep::run(args, std::cout, std::cerr);
}
