#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return mocklab::cli::run(argc, argv, std::cout, std::cerr);
}
