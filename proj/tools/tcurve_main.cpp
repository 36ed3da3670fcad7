#include <iostream>
#include <string>
#include <vector>

#include "tcurve/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tcurve::run_cli(args, std::cout, std::cerr);
}
