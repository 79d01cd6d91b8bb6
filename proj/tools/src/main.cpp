#include <iostream>

#include "acm5cli/commands.hpp"

int main(int argc, char** argv) { return acm5::cli::run(argc, argv, std::cout, std::cerr); }
