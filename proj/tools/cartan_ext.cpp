#include <iostream>

#include "cartan/cli.hpp"

int main(int argc, char** argv) {
  return cartan::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
