#include <iostream>

#include "sidon/cli.hpp"

int main(int argc, char** argv) {
  return sidon::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
