#include "dsem/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return dsem::run_cli(argc, argv, std::cout, std::cerr); }
