#include <iostream>
#include <string>
#include <vector>

#include "lppqs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lppqs::run(args, std::cout, std::cerr);
}
