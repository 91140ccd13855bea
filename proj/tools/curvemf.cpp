#include <iostream>
#include <string>
#include <vector>

#include "cmf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cmf::runCli(args, std::cout, std::cerr);
}
