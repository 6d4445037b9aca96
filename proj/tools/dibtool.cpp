#include <iostream>
#include <string>
#include <vector>

#include "dibc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dibc::cli_main(std::move(args), std::cout, std::cerr);
}
