#include <iostream>

#include "beatty/cli.hpp"

int main(int argc, char** argv) { return beatty::run_cli(argc, argv, std::cout, std::cerr); }
