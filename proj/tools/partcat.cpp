#include <iostream>

#include "partcat/cli.hpp"

int main(int argc, char** argv) { return partcat::cli::run(argc, argv, std::cout, std::cerr); }
