#include <iostream>

#include "idealorder/cli/cli.hpp"

int main(int argc, char** argv) {
  return idealorder::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
