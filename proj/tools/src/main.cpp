#include <iostream>

#include "necksplit/cli.hpp"

int main(int argc, char** argv) { return necksplit::cli::run(argc, argv, std::cout, std::cerr); }
