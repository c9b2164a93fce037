#include <iostream>

#include "graphcode/cli.hpp"

int main(int argc, char** argv) {
    return graphcode::run_cli(argc, argv, std::cout, std::cerr);
}
