#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lorenz::cli {

struct RunConfig {
    int truncation_order = 24;
    std::size_t cycle_budget = 100000;
    std::size_t max_enum_len = 6;
    bool json = false;
};

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Dispatches a full command line (without argv[0]). Exit codes: 0 success,
/// 1 verification failure, 2 usage or parse error, 3 computational error.
RunResult run(const std::vector<std::string>& args);

/// Writes one admissible pair per line; returns the count written.
std::size_t generate_corpus(std::size_t max_x, std::size_t max_y,
                            const std::string& out_path,
                            std::size_t bound = 6);

} // namespace lorenz::cli
