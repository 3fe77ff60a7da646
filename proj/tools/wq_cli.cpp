#include <iostream>
#include <string>
#include <vector>

#include "wq/cli.hpp"

int main(int argc, char** argv) {
  return wq::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
