#include <iostream>

#include "treelab/cli.hpp"

int main(int argc, char** argv) { return treelab::cli::run(argc, argv, std::cout, std::cerr); }
