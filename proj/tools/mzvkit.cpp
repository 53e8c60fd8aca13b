#include <iostream>

#include <mzvkit/cli.hpp>

int main(int argc, char **argv)
{
    return mzvkit::run_main(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
