#include <iostream>

#include "semirings/cli.hpp"

int main(int argc, char** argv) {
  return semirings::cli::run(argc, argv, std::cout, std::cerr);
}
