#include "qmds/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qmds::cli::run(argc, argv, std::cout, std::cerr); }
