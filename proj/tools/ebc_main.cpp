#include <iostream>
#include <vector>

#include "ebc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ebc::dispatch(args, std::cout);
}
