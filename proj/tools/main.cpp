#include "bisetring/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return bisetring::cli::run(argc, argv, std::cout, std::cerr);
}
