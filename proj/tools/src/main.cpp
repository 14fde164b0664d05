#include <iostream>

#include "hfcli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hfcli::run(args, std::cin, std::cout, std::cerr);
}
