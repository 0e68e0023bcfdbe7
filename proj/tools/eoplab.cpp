#include <iostream>
#include <string>
#include <vector>

#include "eoplab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eoplab::run_cli(std::move(args), std::cout, std::cerr);
}
