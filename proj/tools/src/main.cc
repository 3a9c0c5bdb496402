#include <iostream>

#include "conflux_cli/cli.h"

int main(int argc, char** argv) { return conflux::cli::run(argc, argv, std::cout, std::cerr); }
