#include <iostream>

#include "upscale/cli.hpp"

int main(int argc, char** argv) { return upscale::cli::run(argc, argv, std::cout, std::cerr); }
