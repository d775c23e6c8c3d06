#include <iostream>

#include "sgdol/harness/cli.hpp"

int main(int argc, char** argv) { return sgdol::cli_main(argc, argv, std::cout, std::cerr); }
