#include <iostream>

#include "commalg/cli.hpp"

int main(int argc, char** argv) { return commalg::run_cli(argc, argv, std::cout, std::cerr); }
