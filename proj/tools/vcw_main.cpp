#include <iostream>
#include <string>
#include <vector>

#include "vcw/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vcw::cli::run(args, std::cin, std::cout, std::cerr);
}
