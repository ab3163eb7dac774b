#include "totpos/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return totpos::run_cli(argc, argv, std::cout, std::cerr); }
