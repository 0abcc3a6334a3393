#include <iostream>

#include "warpmat/cli.hpp"

int main(int argc, char** argv) { return warpmat::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
