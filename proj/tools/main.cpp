#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv)
{
    return p3vc::cli::run(argc, argv, std::cout, std::cerr);
}
