#include <iostream>

#include "gridposet/cli.hpp"

int main(int argc, char** argv) {
    return gridposet::run(argc, argv, std::cout, std::cerr);
}
