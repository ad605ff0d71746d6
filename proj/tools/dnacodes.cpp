#include <iostream>
#include <string>
#include <vector>

#include "dnacyclic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dnacyclic::run_cli(std::move(args), std::cout, std::cerr);
}
