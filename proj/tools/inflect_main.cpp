#include "inflect/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return inflect::cli::run(argc, argv, std::cout, std::cerr);
}
