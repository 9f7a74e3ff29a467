#include <iostream>

#include "fovisc_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fovisc::cli::dispatch(args, std::cout, std::cerr);
}
