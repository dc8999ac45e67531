#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "theta/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const char* fault = std::getenv("THETA_JORDAN_INJECT_FAULT");
    const bool inject_fault = fault != nullptr && std::string(fault) == "1";
    return theta::cli::main_entry(args, std::cout, std::cerr, inject_fault);
}
