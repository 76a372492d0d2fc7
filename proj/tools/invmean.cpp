#include <iostream>

#include "invmean/commands.hpp"

int main(int argc, char** argv) { return invmean::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
