#include <iostream>

#include "hypmass_cli/cli.hpp"

int main(int argc, char** argv) {
  return hypmass::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
