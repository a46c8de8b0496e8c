#include <iostream>

#include "cocirc/cli.hpp"

int main(int argc, char** argv) { return cocirc::cli::run(argc, argv, std::cout, std::cerr); }
