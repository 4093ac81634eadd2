#include <iostream>

#include "hexwalk/cli/app.hpp"

int main(int argc, char** argv) { return hexwalk::cli::run(argc, argv, std::cout, std::cerr); }
