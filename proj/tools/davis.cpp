#include <iostream>
#include <string>
#include <vector>

#include "davis/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return davis::cli::run(args, std::cout, std::cerr);
}
