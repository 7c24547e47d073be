#include <iostream>
#include <string>
#include <vector>

#include "sphex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sphex::cli::run(std::move(args), std::cout, std::cerr);
}
