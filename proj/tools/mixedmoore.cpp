#include "mixedmoore/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return mixedmoore::cli::run(argc, argv, std::cout, std::cerr);
}
