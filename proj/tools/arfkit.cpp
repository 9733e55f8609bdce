#include <iostream>

#include "arfkit/cli.hpp"

int main(int argc, char** argv) { return arfkit::run_cli(argc, argv, std::cout, std::cerr); }
