#include <iostream>

#include "fractal/cli.hpp"

int main(int argc, char** argv) { return fractal::run_cli(argc, argv, std::cout, std::cerr); }
