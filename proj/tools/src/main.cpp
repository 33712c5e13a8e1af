#include "critnum_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return critnum::cli::run(argc, argv, std::cout, std::cerr);
}
