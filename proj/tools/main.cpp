#include "hexlet/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hexlet::run_cli(argc, argv, std::cout, std::cerr); }
