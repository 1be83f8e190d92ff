#include <iostream>

#include "qtop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qtop::cli::run(args, std::cout, std::cerr);
}
