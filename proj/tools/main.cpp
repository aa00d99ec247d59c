#include <iostream>

#include "splaytrav/cli.hpp"

int main(int argc, char** argv) { return splaytrav::run_cli(argc, argv, std::cout, std::cerr); }
