#include <iostream>
#include <string>
#include <vector>

#include "qomat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qomat::cli_main(args, std::cout, std::cerr);
}
