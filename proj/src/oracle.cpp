#include "sgm/oracle.hpp"

#include <algorithm>
#include <vector>

#include "sgm/moments.hpp"

namespace sgm {
namespace oracle {

namespace {

// Row-per-vertex adjacency bitsets.
struct BitAdjacency {
    explicit BitAdjacency(const Graph& g)
        : n(static_cast<int>(g.vertex_count())), words((n + 63) / 64),
          rows(static_cast<std::size_t>(n) * words, 0) {
        for (int u = 0; u < n; ++u) {
            for (int v : g.neighbors(u)) {
                rows[static_cast<std::size_t>(u) * words + v / 64] |= 1ULL << (v % 64);
            }
        }
    }

    int edges_into(int v, const std::vector<std::uint64_t>& member_mask) const {
        const std::uint64_t* row = rows.data() + static_cast<std::size_t>(v) * words;
        int count = 0;
        for (int w = 0; w < words; ++w) {
            count += __builtin_popcountll(row[w] & member_mask[w]);
        }
        return count;
    }

    int n;
    int words;
    std::vector<std::uint64_t> rows;
};

} // namespace

ExactDistribution exact_distribution(const Graph& g, long long c, long long budget) {
    const long long n = g.vertex_count();
    if (c < 0 || c > n) {
        throw ValidationError("c = " + std::to_string(c) + " outside valid range 0.." +
                              std::to_string(n));
    }
    BigInt total = binomial(n, c);
    if (total > bigint(budget)) {
        throw BudgetError("enumeration of C(" + std::to_string(n) + "," + std::to_string(c) +
                              ") = " + total.get_str() + " subsets exceeds budget " +
                              std::to_string(budget),
                          total.get_str());
    }

    ExactDistribution dist;
    dist.c = c;
    dist.total = total;
    if (c == 0) {
        dist.counts[0] = 1;
        return dist;
    }

    BitAdjacency adj(g);
    std::vector<std::uint64_t> members(static_cast<std::size_t>(adj.words), 0);
    const long long max_size = c * (c - 1) / 2;
    std::vector<unsigned long long> by_size(static_cast<std::size_t>(max_size) + 1, 0);

    // Depth-first subset walk; each level adds one vertex, so the induced-edge
    // counter moves by exactly the edges between the new vertex and the
    // current members.
    auto recurse = [&](auto&& self, int start, long long edges, long long remaining) -> void {
        if (remaining == 0) {
            ++by_size[static_cast<std::size_t>(edges)];
            return;
        }
        for (int v = start; v <= adj.n - static_cast<int>(remaining); ++v) {
            int gained = adj.edges_into(v, members);
            members[v / 64] |= 1ULL << (v % 64);
            self(self, v + 1, edges + gained, remaining - 1);
            members[v / 64] &= ~(1ULL << (v % 64));
        }
    };
    recurse(recurse, 0, 0, c);

    BigInt check = 0;
    for (long long k = 0; k <= max_size; ++k) {
        if (by_size[static_cast<std::size_t>(k)] > 0) {
            BigInt cnt = bigint(static_cast<long long>(by_size[static_cast<std::size_t>(k)]));
            dist.counts[k] = cnt;
            check += cnt;
        }
    }
    if (check != dist.total) {
        throw Error("internal error: enumeration counted " + check.get_str() +
                    " subsets, expected " + dist.total.get_str());
    }
    return dist;
}

DistributionSummary exact_summary(const ExactDistribution& dist) {
    DistributionSummary s;
    if (dist.counts.empty() || dist.total == 0) {
        throw ValidationError("summary of an empty distribution");
    }
    s.ell = dist.counts.begin()->first;
    s.u = dist.counts.rbegin()->first;
    s.count_at_ell = dist.counts.begin()->second;
    s.count_at_u = dist.counts.rbegin()->second;
    BigInt sum1 = 0, sum2 = 0;
    for (const auto& [k, cnt] : dist.counts) {
        sum1 += bigint(k) * cnt;
        sum2 += bigint(k) * bigint(k - 1) / 2 * cnt;
    }
    s.s1 = Rational(sum1, dist.total);
    s.s2 = Rational(sum2, dist.total);
    s.mu2 = s.s2 * Rational(2) + s.s1;
    s.sigma2 = s.s2 * Rational(2) - s.s1 * (s.s1 - Rational(1));
    return s;
}

Rational exact_tail(const ExactDistribution& dist, long long t) {
    BigInt hits = 0;
    for (const auto& [k, cnt] : dist.counts) {
        if (k >= t) hits += cnt;
    }
    return Rational(hits, dist.total);
}

ExactDistribution family_distribution(ClosedFormFamily family, long long param, long long c) {
    ExactDistribution dist;
    dist.c = c;
    auto check_c = [&](long long n) {
        if (c < 2 || c > n) {
            throw ValidationError("c = " + std::to_string(c) + " outside valid range 2.." +
                                  std::to_string(n));
        }
    };
    switch (family) {
        case ClosedFormFamily::complete: {
            long long n = param;
            check_c(n);
            dist.total = binomial(n, c);
            dist.counts[c * (c - 1) / 2] = dist.total; // degenerate at gamma_c
            break;
        }
        case ClosedFormFamily::star: {
            long long n = param;
            check_c(n);
            dist.total = binomial(n, c);
            // Two-point law: 0 unless the subset contains the hub.
            BigInt misses = binomial(n - 1, c);
            if (misses > 0) dist.counts[0] = misses;
            dist.counts[c - 1] = binomial(n - 1, c - 1);
            break;
        }
        case ClosedFormFamily::complete_bipartite_balanced: {
            long long d = param;
            long long n = 2 * d;
            check_c(n);
            dist.total = binomial(n, c);
            // A subset with s vertices on one side induces s(c-s) edges. The
            // (s, c-s) and (c-s, s) splits coincide when s = c/2, so the
            // symmetry factor 2 applies only to unequal splits.
            for (long long s = std::max(0LL, c - d); s <= c / 2; ++s) {
                long long t = c - s;
                BigInt ways = binomial(d, s) * binomial(d, t);
                if (s != t) ways *= 2;
                if (ways > 0) dist.counts[s * t] += ways;
            }
            break;
        }
        case ClosedFormFamily::matching: {
            long long d = param;
            long long n = 2 * d;
            check_c(n);
            dist.total = binomial(n, c);
            // k fully chosen edges, c-2k half-chosen edges (2 ways each).
            for (long long k = std::max(0LL, c - d); 2 * k <= c; ++k) {
                BigInt ways = binomial(d, k) * binomial(d - k, c - 2 * k);
                BigInt two_pow;
                mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(c - 2 * k));
                ways *= two_pow;
                if (ways > 0) dist.counts[k] += ways;
            }
            break;
        }
    }
    BigInt check = 0;
    for (const auto& [k, cnt] : dist.counts) check += cnt;
    if (check != dist.total) {
        throw Error("closed-form distribution sums to " + check.get_str() + ", expected " +
                    dist.total.get_str());
    }
    return dist;
}

TrivialCounts exact_trivial_counts(const Graph& g, long long c, long long budget) {
    ExactDistribution dist = exact_distribution(g, c, budget);
    TrivialCounts out;
    out.c = c;
    auto count_at = [&](long long k) {
        auto it = dist.counts.find(k);
        return it == dist.counts.end() ? BigInt(0) : it->second;
    };
    out.independent_sets = count_at(0);
    out.cliques = count_at(c * (c - 1) / 2);
    if (g.is_tree()) {
        // A c-subset of a tree inducing c-1 edges induces a forest with c-1
        // edges on c vertices, which is necessarily connected.
        out.subtrees = count_at(c - 1);
    }
    // Balanced bicliques only make sense for bipartite graphs and even c.
    bool bipartite = true;
    {
        // Cheap 2-coloring over adjacency.
        const long long n = g.vertex_count();
        std::vector<signed char> color(static_cast<std::size_t>(n), -1);
        std::vector<int> stack;
        for (int s = 0; s < n && bipartite; ++s) {
            if (color[s] != -1) continue;
            color[s] = 0;
            stack.push_back(s);
            while (!stack.empty() && bipartite) {
                int u = stack.back();
                stack.pop_back();
                for (int v : g.neighbors(u)) {
                    if (color[v] == -1) {
                        color[v] = static_cast<signed char>(1 - color[u]);
                        stack.push_back(v);
                    } else if (color[v] == color[u]) {
                        bipartite = false;
                        break;
                    }
                }
            }
        }
    }
    if (bipartite && c % 2 == 0) {
        out.balanced_bicliques = count_at(c * c / 4);
    }
    return out;
}

namespace {

// Max independent set on the subset `candidates`, branching on the highest-
// degree remaining vertex. Fine for the desk-scale graphs the oracle serves.
long long mis_recurse(const std::vector<std::vector<std::uint64_t>>& rows, int words,
                      std::vector<std::uint64_t> candidates) {
    long long remaining = 0;
    int pick = -1;
    int pick_degree = -1;
    for (int w = 0; w < words; ++w) remaining += __builtin_popcountll(candidates[w]);
    if (remaining == 0) return 0;

    for (int w = 0; w < words; ++w) {
        std::uint64_t bits = candidates[w];
        while (bits) {
            int v = w * 64 + __builtin_ctzll(bits);
            bits &= bits - 1;
            int deg = 0;
            for (int x = 0; x < words; ++x) {
                deg += __builtin_popcountll(rows[v][x] & candidates[x]);
            }
            if (deg > pick_degree) {
                pick_degree = deg;
                pick = v;
            }
        }
    }
    if (pick_degree == 0) return remaining; // no edges left: take everything

    // Branch 1: exclude pick. Branch 2: include pick, drop its neighbors.
    std::vector<std::uint64_t> without = candidates;
    without[pick / 64] &= ~(1ULL << (pick % 64));
    long long best = mis_recurse(rows, words, without);
    std::vector<std::uint64_t> with = without;
    for (int w = 0; w < words; ++w) with[w] &= ~rows[pick][w];
    best = std::max(best, 1 + mis_recurse(rows, words, with));
    return best;
}

} // namespace

long long independence_number(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    if (n == 0) return 0;
    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(n),
                                                 std::vector<std::uint64_t>(words, 0));
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) rows[u][v / 64] |= 1ULL << (v % 64);
    }
    std::vector<std::uint64_t> all(words, 0);
    for (int v = 0; v < n; ++v) all[v / 64] |= 1ULL << (v % 64);
    return mis_recurse(rows, words, all);
}

long long clique_number(const Graph& g) {
    // omega(G) = alpha of the complement.
    const int n = static_cast<int>(g.vertex_count());
    std::vector<std::pair<int, int>> comp_edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) comp_edges.emplace_back(u, v);
        }
    }
    return independence_number(Graph(n, std::move(comp_edges)));
}

} // namespace oracle
} // namespace sgm
