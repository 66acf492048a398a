#include <iostream>

#include "algser/cli.hpp"

int main(int argc, char** argv) { return algser::run_cli(argc, argv, std::cout, std::cerr); }
