#include <iostream>

#include "dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return secant::cli::dispatch(args, std::cin, std::cout, std::cerr);
}
