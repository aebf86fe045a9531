#include "sbgg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return sbgg::cli::main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
