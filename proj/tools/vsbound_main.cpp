#include "vsbound/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return vsbound::cli::run(argc, argv, std::cout, std::cerr); }
