#pragma once

#include <map>
#include <optional>

#include "sgm/graph.hpp"
#include "sgm/rational.hpp"

namespace sgm {
namespace oracle {

inline constexpr long long kDefaultBudget = 10'000'000;

// Exact distribution of the induced size over all c-subsets:
// counts[k] = number of c-subsets inducing exactly k edges.
struct ExactDistribution {
    long long c = 0;
    BigInt total;                    // C(n, c)
    std::map<long long, BigInt> counts;
};

// Enumerates every c-subset once; refuses (BudgetError) when C(n, c) exceeds
// the budget. Sizes come from an incrementally maintained induced-edge counter
// over bitset adjacency rows.
ExactDistribution exact_distribution(const Graph& g, long long c,
                                     long long budget = kDefaultBudget);

struct DistributionSummary {
    long long ell = 0;   // min support = c-sparsest subgraph size
    long long u = 0;     // max support = c-densest subgraph size
    Rational s1;
    Rational s2;
    Rational mu2;
    Rational sigma2;
    BigInt count_at_ell;
    BigInt count_at_u;
};

DistributionSummary exact_summary(const ExactDistribution& dist);

// P(M >= t), exactly.
Rational exact_tail(const ExactDistribution& dist, long long t);

// Families with known closed-form distributions.
enum class ClosedFormFamily {
    complete,                   // param = n
    star,                       // param = n
    complete_bipartite_balanced, // param = d, graph K_{d,d}
    matching,                   // param = d, graph of d disjoint edges
};

// Closed-form distribution rescaled to subset counts. Checked to sum to
// C(n, c); for the matching family that check is the multinomial identity
// C(2d, c) = sum_k (d; k, c-2k, d-c+k) 2^(c-2k).
ExactDistribution family_distribution(ClosedFormFamily family, long long param, long long c);

struct TrivialCounts {
    long long c = 0;
    BigInt independent_sets;                 // subsets inducing 0 edges
    BigInt cliques;                          // subsets inducing c(c-1)/2 edges
    std::optional<BigInt> subtrees;          // trees only: subsets inducing c-1 edges
    std::optional<BigInt> balanced_bicliques; // bipartite, even c: subsets inducing c^2/4 edges
};

TrivialCounts exact_trivial_counts(const Graph& g, long long c,
                                   long long budget = kDefaultBudget);

// Exact alpha / omega by branch-and-bound search; intended for small graphs.
long long independence_number(const Graph& g);
long long clique_number(const Graph& g);

} // namespace oracle
} // namespace sgm
