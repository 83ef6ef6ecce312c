#include <cstdlib>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return esakia::cli::run_command(args, std::cout, std::cerr, std::getenv("ESAKIA_SEED"));
}
