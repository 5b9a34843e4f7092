#include <iostream>
#include <string>
#include <vector>

#include "hopfkiss/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return hopfkiss::run_cli(args, std::cout, std::cerr);
}
