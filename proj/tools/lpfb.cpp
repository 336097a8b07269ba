#include <iostream>

#include "lpfb/cli.hpp"

int main(int argc, char** argv) {
  return lpfb::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
