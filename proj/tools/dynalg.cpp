#include <iostream>

#include "dynalg/cli.hpp"

int main(int argc, char** argv) { return dynalg::run(argc, argv, std::cout, std::cerr); }
