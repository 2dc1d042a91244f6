#include <iostream>

#include "cow/cli.hpp"

int main(int argc, char** argv) { return cow::cli::run(argc, argv, std::cout, std::cerr); }
