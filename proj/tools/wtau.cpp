#include <iostream>

#include "wtau/cli.hpp"

int main(int argc, char** argv) {
  return wtau::cli::main(argc, argv, std::cout, std::cerr);
}
