#include <iostream>
#include <string>
#include <vector>

#include "freeid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return freeid::cli::run(args, std::cout, std::cerr);
}
