#include <iostream>

#include "triq/cli/app.hpp"

int main(int argc, char** argv) { return triq::cli::run_cli(argc, argv, std::cout, std::cerr); }
