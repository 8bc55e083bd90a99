#include "prym/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return prym::run_cli(argc, argv, std::cout, std::cerr);
}
