#include <iostream>

#include "gradest/cli.hpp"

int main(int argc, char** argv) { return gradest::cli::run(argc, argv, std::cout, std::cerr); }
