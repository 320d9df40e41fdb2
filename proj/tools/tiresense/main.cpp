#include <iostream>

#include "tiresense/cli/app.hpp"

int main(int argc, char** argv) { return tiresense::cli::run_cli(argc, argv, std::cout, std::cerr); }
