#include <iostream>

#include "distcrypt/cli.hpp"

int main(int argc, char** argv) {
  return distcrypt::run_cli(argc, argv, std::cout, std::cerr);
}
