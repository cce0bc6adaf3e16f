#include <iostream>

#include "arbocoh/cli/app.hpp"

int main(int argc, char** argv) { return arbocoh::cli::run(argc, argv, std::cout, std::cerr); }
