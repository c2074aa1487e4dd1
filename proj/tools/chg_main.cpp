#include <iostream>

#include "chg/cli.hpp"

int main(int argc, char** argv) { return chg::cli::run(argc, argv, std::cout, std::cerr); }
