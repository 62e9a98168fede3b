#include <iostream>

#include "hypvol/cli.hpp"

int main(int argc, char** argv)
{
    return hypvol::run_cli(argc, argv, std::cout, std::cerr);
}
