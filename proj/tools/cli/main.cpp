#include "cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    return besselquad::cli::run(argc, argv, std::cout, std::cerr, std::getenv("BESSELQUAD_NMAX"));
}
