#include <iostream>

#include "dirset/cli.hpp"

int main(int argc, char** argv) { return dirset::run_cli(argc, argv, std::cout, std::cerr); }
