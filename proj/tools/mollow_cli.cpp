#include <iostream>

#include "mollow/cli.hpp"

int main(int argc, char** argv) { return mollow::cli::run(argc, argv, std::cout, std::cerr); }
