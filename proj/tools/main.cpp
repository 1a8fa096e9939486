#include <iostream>
#include <string>
#include <vector>

#include "tclab/cli.hpp"

int main(int argc, char** argv) {
    return tc::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
