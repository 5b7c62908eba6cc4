#include <iostream>

#include "bennequin/cli.hpp"

int main(int argc, char** argv) {
  return bennequin::cli::run(argc, argv, std::cout, std::cerr);
}
