#include <iostream>

#include "linset/cli.hpp"

int main(int argc, char** argv) { return linset::run_cli(argc, argv, std::cout, std::cerr); }
