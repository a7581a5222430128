#include "zsl/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return zsl::run_cli(argc, argv, std::cout, std::cerr); }
