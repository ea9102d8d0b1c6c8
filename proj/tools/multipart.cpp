#include <iostream>

#include "multipart/cli.hpp"

int main(int argc, char** argv) {
    return multipart::cli::run(argc, argv, std::cout, std::cerr);
}
