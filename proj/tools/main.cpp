#include <iostream>

#include "pcube/cli.hpp"

int main(int argc, char** argv) {
    return pcube::run_cli({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
