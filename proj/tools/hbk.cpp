#include <iostream>

#include "hbk/cli.hpp"

int main(int argc, char** argv) {
    return hbk::run_cli(argc, argv, std::cout, std::cerr);
}
