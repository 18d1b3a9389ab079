#include <iostream>
#include <string>
#include <vector>

#include "msquant/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return msq::cli::run(args, std::cout, std::cerr);
}
