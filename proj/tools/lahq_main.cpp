#include <iostream>

#include "lahq/cli.hpp"

int main(int argc, char** argv) { return lahq::run_cli(argc, argv, std::cout, std::cerr); }
