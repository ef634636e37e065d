#include <iostream>

#include "tristeiner/cli.hpp"

int main(int argc, char** argv) { return tristeiner::cli::run(argc, argv, std::cout, std::cerr); }
