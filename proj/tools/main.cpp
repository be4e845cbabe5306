#include "ncmorse/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ncmorse::run_cli(argc, argv, std::cout, std::cerr); }
