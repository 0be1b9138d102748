#include <iostream>
#include <vector>

#include "gpl/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gpl::run_cli(std::move(args), std::cout, std::cerr);
}
