#include <iostream>
#include <string>
#include <vector>

#include "selflink/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return selflink::cli::run(args, std::cout, std::cerr);
}
