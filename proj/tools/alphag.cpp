#include "alphag/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return alphag::cli::run_cli(argc, argv, std::cout, std::cerr); }
