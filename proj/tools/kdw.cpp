#include <iostream>

#include "kdw/cli.hpp"

int main(int argc, char** argv) {
  return kdw::cli::run(argc, argv, std::cout, std::cerr);
}
