#include <iostream>

#include "rsurf/cli.hpp"

int main(int argc, char** argv) { return rsurf::cli_main(argc, argv, std::cout, std::cerr); }
