#pragma once

#include <cstddef>
#include <vector>

namespace lorenz {

/// All simple cycles of a 0/1 adjacency matrix, as node sequences starting
/// at their smallest node. Depth-first search anchored at each start node in
/// turn, visiting only larger nodes, so every cycle is produced exactly once.
/// Deterministic order. Throws CycleBudgetExceeded past `budget` cycles.
std::vector<std::vector<std::size_t>> simple_cycles(
    const std::vector<std::vector<int>>& adjacency, std::size_t budget);

} // namespace lorenz
