#include <iostream>
#include <string>
#include <vector>

#include "pwpoly/cli.hpp"

int main(int argc, char** argv)
{
  std::vector<std::string> args(argv, argv + argc);
  return pwpoly::run_cli(args, std::cout, std::cerr);
}
