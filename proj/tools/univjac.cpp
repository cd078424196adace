#include <iostream>

#include "univjac/cli.hpp"

int main(int argc, char** argv) { return univjac::cli::run(argc, argv, std::cout, std::cerr); }
