#include <iostream>

#include "weyl/cli.hpp"

int main(int argc, char** argv) {
  return weyl::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
