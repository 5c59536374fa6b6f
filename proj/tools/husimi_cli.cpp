#include <iostream>

#include "husimi/cli.hpp"

int main(int argc, char** argv) { return husimi::cli::run(argc, argv, std::cout, std::cerr); }
