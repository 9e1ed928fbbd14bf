#include <iostream>
#include <string>
#include <vector>

#include "taskalloc/cli/app.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return taskalloc::cli::run_cli(args, std::cout, std::cerr);
}
