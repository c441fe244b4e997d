#include <iostream>

#include "hypeval_cli/app.hpp"

int main(int argc, char** argv) { return hypeval::cli::run_cli(argc, argv, std::cout, std::cerr); }
