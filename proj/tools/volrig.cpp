#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv)
{
    auto parsed = volrig::cli::parse_arguments(argc, argv, std::cout, std::cerr);
    if (const int* status = std::get_if<int>(&parsed))
        return *status;
    return volrig::cli::run(std::get<volrig::cli::CommandRequest>(parsed), std::cout);
}
