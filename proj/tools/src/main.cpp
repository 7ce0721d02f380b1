#include <iostream>
#include <string>
#include <vector>

#include "jetscheme/cli/dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jetscheme::cli::dispatch(args, std::cin, std::cout, std::cerr);
}
