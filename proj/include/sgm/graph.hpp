#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgm/errors.hpp"

namespace sgm {

// Simple undirected graph on dense vertex indices 0..n-1. Immutable after
// construction: no self-loops, no duplicate neighbors, adjacency lists sorted,
// m = sum(deg)/2.
class Graph {
public:
    Graph() = default;

    // Validates indices, rejects self-loops, collapses duplicate edges.
    Graph(long long n, std::vector<std::pair<int, int>> edge_list);

    long long vertex_count() const { return static_cast<long long>(adj_.size()); }
    long long edge_count() const { return m_; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::span<const int> neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;
    bool is_tree() const;

private:
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// A parsed graph plus the original vertex labels, index -> label.
struct ParsedGraph {
    Graph graph;
    std::vector<std::string> labels;
};

// Edge-list text: one "u v" pair per line; '#'/'%' lines are comments; an
// optional leading "n <N>" header forces the vertex count. Labels that are all
// non-negative integers are used as indices directly; otherwise every token is
// mapped to a dense index in first-seen order.
ParsedGraph parse_edge_list(std::string_view text);

// Canonical form: "n <N>" header, then one "u v" line per edge, u < v, sorted.
std::string serialize(const Graph& g);

// Generators. Deterministic; seeded generators are reproducible across runs.
Graph complete(long long n);
Graph star(long long n);                          // K_{1,n-1}
Graph complete_bipartite(long long a, long long b);
Graph matching(long long d);                      // d disjoint edges, n = 2d
Graph path(long long n);
Graph empty_graph(long long n);
Graph random_gnm(long long n, long long m, std::uint64_t seed);
Graph random_tree(long long n, std::uint64_t seed);

} // namespace sgm
