#include <iostream>

#include "oddgroup/cli.hpp"

int main(int argc, char** argv) { return oddgroup::run_cli(argc, argv, std::cout, std::cerr); }
