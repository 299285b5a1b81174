#include <iostream>

#include "tcflow/cli/run.hpp"

int main(int argc, char** argv) { return tcflow::cli::run(argc, argv, std::cout, std::cerr); }
