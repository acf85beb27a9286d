#include <iostream>

#include "qgg/cli.hpp"

int main(int argc, char** argv) { return qgg::run_cli(argc, argv, std::cout, std::cerr); }
