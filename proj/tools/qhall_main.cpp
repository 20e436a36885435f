#include <iostream>

#include "qhall/cli.hpp"

int main(int argc, char** argv) {
  return qhall::run_cli(argc, argv, std::cout, std::cerr);
}
