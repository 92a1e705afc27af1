#include <iostream>

#include "quillen/cli.hpp"

int main(int argc, char** argv) { return quillen::cli::run(argc, argv, std::cout, std::cerr); }
