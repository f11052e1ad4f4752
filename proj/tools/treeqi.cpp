#include <iostream>
#include <string>
#include <vector>

#include "treeqi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return treeqi::cli::run(args, std::cout, std::cerr);
}
