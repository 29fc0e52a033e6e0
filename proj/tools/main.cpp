#include <iostream>

#include "horn/cli.hpp"

int main(int argc, char** argv) {
    return horn::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
