#include <iostream>

#include "dvnug/cli.hpp"

int main(int argc, char** argv) { return dvnug::run_cli(argc, argv, std::cout, std::cerr); }
