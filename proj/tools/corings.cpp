#include <iostream>

#include "corings/cli.hpp"

int main(int argc, char** argv) { return corings::cli::run(argc, argv, std::cout, std::cerr); }
