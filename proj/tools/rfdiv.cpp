#include "rfdiv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return rfdiv::cli::run(argc, argv, std::cout, std::cerr); }
