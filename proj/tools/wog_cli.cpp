#include <iostream>

#include "wog/cli.hpp"

int main(int argc, char** argv)
{
    return wog::cli::run(argc, argv, std::cout, std::cerr);
}
