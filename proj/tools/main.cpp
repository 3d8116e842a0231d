#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    hcl::cli::RunConfig config;
    if (auto code = hcl::cli::parse(argc, argv, config, std::cout, std::cerr)) {
        return *code;
    }
    return hcl::cli::run(config, std::cout, std::cerr);
}
