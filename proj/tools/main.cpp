#include "cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    return zb::cli::run(argc, argv, std::cout, std::cerr, std::getenv("ZB_TOL"));
}
