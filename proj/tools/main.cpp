#include <iostream>
#include <string>
#include <vector>

#include "cpsample/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cpsample::cli::run(args, std::cout, std::cerr);
}
