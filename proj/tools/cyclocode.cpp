#include <iostream>

#include "cyclocode/cli.hpp"

int main(int argc, char** argv) { return cyclocode::cli::run(argc, argv, std::cout, std::cerr); }
