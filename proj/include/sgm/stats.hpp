#pragma once

#include "sgm/graph.hpp"

namespace sgm {

// Scalars every moment/bound formula consumes, all O(n + m) to compute.
// Complement statistics come from the degree sequence; the complement itself
// is never materialized.
struct GraphStats {
    long long n = 0;
    long long m = 0;
    long long d2 = 0;            // sum over v of d(v)(d(v)-1)
    bool is_bipartite = true;
    long long alpha_upper = 0;   // certified upper bound on the independence number
    long long omega_upper = 0;   // certified upper bound on the clique number
    long long comp_m = 0;        // edge count of the complement
    long long comp_d2 = 0;       // d2 of the complement
};

GraphStats compute_stats(const Graph& g);

// Smallest k such that every subgraph has a vertex of degree <= k.
long long degeneracy(const Graph& g);

} // namespace sgm
