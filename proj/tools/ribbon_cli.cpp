#include <iostream>

#include "ribbon/cli.hpp"

int main(int argc, char** argv) { return ribbon::cli::run(argc, argv, std::cout, std::cerr); }
