#include <iostream>

#include "wcc/cli.hpp"

int main(int argc, char** argv) { return wcc::cli::run(argc, argv, std::cout, std::cerr); }
