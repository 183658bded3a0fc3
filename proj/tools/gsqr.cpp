#include <iostream>

#include "gsqr/cli.hpp"

int main(int argc, char** argv) { return gsqr::run_cli(argc, argv, std::cout, std::cerr); }
