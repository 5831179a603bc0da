#include <iostream>
#include <string>
#include <vector>

#include "a2cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return a2::cli::run(args, std::cout, std::cerr);
}
