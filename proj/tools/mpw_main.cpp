#include <iostream>
#include <string>
#include <vector>

#include "mpwright/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mpw::run_cli(args, std::cout, std::cerr);
}
