#include <iostream>
#include <string>
#include <vector>

#include "mixgauss/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mixgauss::cli::run(args, std::cout, std::cerr);
}
