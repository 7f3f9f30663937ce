#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "sgm/graph.hpp"

namespace sgm_test {

inline std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

inline sgm::Graph graph_from_mask(int n, std::uint64_t mask,
                                  const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) edges.push_back(pairs[i]);
    }
    return sgm::Graph(n, std::move(edges));
}

// Every labeled graph on n vertices, one per edge subset.
inline void for_each_graph(int n, const std::function<void(const sgm::Graph&)>& fn) {
    auto pairs = all_pairs(n);
    std::uint64_t total = 1ULL << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        fn(graph_from_mask(n, mask, pairs));
    }
}

inline bool has_triangle(const sgm::Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (v > u)
                for (int w : g.neighbors(v))
                    if (w > v && g.has_edge(u, w)) return true;
    return false;
}

inline bool is_regular(const sgm::Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != g.degree(0)) return false;
    return true;
}

} // namespace sgm_test
