#include <iostream>

#include "crossmax/cli.hpp"

int main(int argc, char** argv) {
    return crossmax::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
