#include <iostream>

#include "semibrick/cli.hpp"

int main(int argc, char** argv) { return semibrick::cli::run_cli(argc, argv, std::cout, std::cerr); }
