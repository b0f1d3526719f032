#include <iostream>

#include "zerogeo/cli.hpp"

int main(int argc, char** argv) { return zerogeo::run_cli(argc, argv, std::cout, std::cerr); }
