#include <iostream>

#include "nsgr/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nsgr::run_cli(args, std::cout, std::cerr);
}
