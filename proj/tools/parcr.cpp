#include <iostream>

#include "parcr/cli.hpp"

int main(int argc, char** argv) {
  return parcr::main_impl(argc, argv, std::cout, std::cerr);
}
