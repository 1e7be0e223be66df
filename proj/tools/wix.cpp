#include <iostream>

#include "wix/cli.hpp"

int main(int argc, char** argv) { return wix::cli::main(argc, argv, std::cout, std::cerr); }
