#include <iostream>
#include <string>
#include <vector>

#include "holmc/cli.hpp"

int main(int argc, char** argv) {
    return holmc::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
