#include "selfext/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return selfext::run(argc, argv, std::cout, std::cerr);
}
