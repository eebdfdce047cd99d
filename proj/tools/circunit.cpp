#include <iostream>

#include "circunit/cli.hpp"

int main(int argc, char** argv) { return circunit::run_cli(argc, argv, std::cout, std::cerr); }
