#include <iostream>

#include "cdhom/cli.hpp"

int main(int argc, char **argv) {
  return cdhom::run_cli(argc, argv, std::cout, std::cerr);
}
