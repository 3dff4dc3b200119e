#include <iostream>

#include "qcyclo/cli.hpp"

int main(int argc, char** argv) {
  return qcyclo::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
