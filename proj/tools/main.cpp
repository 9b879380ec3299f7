#include <iostream>

#include "pistar/cli.hpp"

int main(int argc, char** argv) { return pistar::run_cli(argc, argv, std::cout, std::cerr); }
