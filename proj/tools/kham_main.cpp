#include <iostream>

#include "kham/cli.hpp"

int main(int argc, char** argv) { return kham::run_cli(argc, argv, std::cout, std::cerr); }
