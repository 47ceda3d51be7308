#include <iostream>
#include <string>
#include <vector>

#include "jumpform/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return jumpform::run_cli(args, std::cout, std::cerr);
}
