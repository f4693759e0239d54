#include "lmflat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lmflat::cli::run(argc, argv, std::cout, std::cerr); }
