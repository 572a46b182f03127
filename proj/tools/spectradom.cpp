#include <iostream>

#include "spectradom/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return spectradom::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
