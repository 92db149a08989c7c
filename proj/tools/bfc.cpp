#include <iostream>
#include <string>
#include <vector>

#include "bfc/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return bfc::run_cli(args, std::cout, std::cerr);
}
