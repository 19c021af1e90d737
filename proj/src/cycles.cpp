#include "lorenz/cycles.hpp"

#include "lorenz/errors.hpp"

namespace lorenz {

namespace {

void extend(const std::vector<std::vector<int>>& adj, std::size_t start,
            std::vector<std::size_t>& path, std::vector<bool>& on_path,
            std::size_t budget,
            std::vector<std::vector<std::size_t>>& out) {
    std::size_t v = path.back();
    for (std::size_t w = start; w < adj.size(); ++w) {
        if (!adj[v][w]) continue;
        if (w == start) {
            if (out.size() >= budget)
                throw CycleBudgetExceeded("more than " +
                                          std::to_string(budget) +
                                          " simple cycles");
            out.push_back(path);
        } else if (!on_path[w]) {
            path.push_back(w);
            on_path[w] = true;
            extend(adj, start, path, on_path, budget, out);
            on_path[w] = false;
            path.pop_back();
        }
    }
}

} // namespace

std::vector<std::vector<std::size_t>> simple_cycles(
    const std::vector<std::vector<int>>& adjacency, std::size_t budget) {
    std::vector<std::vector<std::size_t>> out;
    std::size_t n = adjacency.size();
    std::vector<bool> on_path(n, false);
    std::vector<std::size_t> path;
    for (std::size_t start = 0; start < n; ++start) {
        path.assign(1, start);
        on_path.assign(n, false);
        on_path[start] = true;
        extend(adjacency, start, path, on_path, budget, out);
    }
    return out;
}

} // namespace lorenz
