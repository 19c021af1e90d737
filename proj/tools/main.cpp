#include <iostream>
#include <string>
#include <vector>

#include "lorenz/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = lorenz::cli::run(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
