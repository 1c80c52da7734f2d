#include <iostream>

#include "fatgasket/cli.hpp"

int main(int argc, char** argv) {
    return fatgasket::cli::run(argc, argv, std::cout, std::cerr);
}
