#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgm/graph.hpp"
#include "sgm/moments.hpp"

namespace sgm {

// Lower bound on P(M >= 1): s1^2 / (2 s2 + s1). Returns 0 for an edgeless
// graph (the tail itself is 0).
Rational chung_erdos_lower(const MomentSummary& mom);

// Lower bound on P(M >= t): (s1 - t + 1)^2 / (2 s2 + s1), valid for integer t
// with 1 <= t <= s1. Coincides with chung_erdos_lower at t = 1.
Rational petrov_lower(const MomentSummary& mom, long long t);

// Upper bound on P(M >= t) from the second factorial moment:
// min(1, 2 s2 / (t (t-1))) for t >= 2. At t = 1 the denominator vanishes and
// the first-order Markov bound min(1, s1) is returned instead.
Rational factorial_upper(const MomentSummary& mom, long long t);

// One-sided Chebyshev: 1 for t <= s1, otherwise sigma2 / ((s1-t)^2 + sigma2);
// 0 when the distribution is constant and t exceeds it.
Rational cantelli_upper(const MomentSummary& mom, const Rational& t);

// Upper bound on P(M >= t) by applying Petrov to the complement tail through
// M(G) + M(comp) = c(c-1)/2: returns 1 - (t - s1)^2 / (2 comp_s2 + comp_s1),
// clamped to [0, 1]. Requires s1 + 1 <= t <= c(c-1)/2 and a complement with
// at least one edge.
Rational complement_petrov_upper(const MomentSummary& mom, const MomentSummary& comp,
                                 long long c, long long t);

struct TailReport {
    long long c = 0;
    long long t = 0;
    Rational chung_erdos_lb;                 // lower bound on P(M >= 1)
    std::optional<Rational> petrov_lb;       // lower bound on P(M >= t)
    std::optional<Rational> factorial_ub;    // upper bounds on P(M >= t)
    std::optional<Rational> cantelli_ub;
    std::optional<Rational> complement_ub;
    Rational combined_ub;                    // min(1, applicable upper bounds)
    std::vector<std::string> notes;          // degenerate/absent branches taken
};

// Populates every applicable bound at threshold t; inapplicable terms stay
// absent and are listed in notes. combined_ub = 1 when t = 0.
TailReport combined_upper_tail(const MomentSummary& mom, const MomentSummary& comp,
                               long long t);
TailReport combined_upper_tail(const GraphStats& stats, long long c, long long t);

// The two bounds exactly as printed in some presentations of this material:
// s2/t^(2) instead of 2 s2/t^(2), and numerator (s1 - t + 1)^2 in the
// complement term. Exposed for comparison only; neither is used by
// combined_upper_tail and neither is asserted sound.
struct PrintedVariants {
    std::optional<Rational> factorial_half;       // s2 / (t (t-1)), t >= 2
    std::optional<Rational> complement_shifted;   // 1 - (s1 - t + 1)^2 / comp_mu2
};
PrintedVariants printed_variants(const MomentSummary& mom, const MomentSummary& comp,
                                 long long t);

enum class CountKind { independent_sets, cliques, subtrees, balanced_bicliques };

struct CountBound {
    long long c = 0;
    CountKind kind = CountKind::independent_sets;
    Rational bound;       // upper bound on the count, exact rational
    BigInt binomial_total; // C(n, c)
};

// C(n, c) times the applicable tail bound: independent sets via the
// Chung-Erdos complement route, cliques at t = c(c-1)/2, subtrees (trees
// only) at t = c-1, balanced bicliques (bipartite, even c) at t = c^2/4.
CountBound count_bound(const Graph& g, const GraphStats& stats, long long c, CountKind kind);

// Per-order count bounds summed into totals for a tree. Single-vertex
// subtrees contribute one unit in total, the convention under which the star
// attains 2^(n-1) exactly.
struct TreeAggregates {
    Rational independent_sets_total; // 1 + n + sum over c of the per-c bound
    Rational subtrees_total;         // 1 + sum over c of the per-c bound
};

TreeAggregates tree_aggregate_bounds(const Graph& g, const GraphStats& stats);

struct SignificanceResult {
    long long c = 0;
    long long m_community = 0; // edges with both ends inside the community
    Rational s1;               // expected induced size at order c
    Rational tail_bound;       // certified upper bound on the p-value
    bool significant = false;  // tail_bound <= alpha
};

// Hyper-density test: is the community denser than a random c-subset at
// level alpha? Sound: the true P(M >= m_community) never exceeds tail_bound.
SignificanceResult significance_test(const Graph& g, const GraphStats& stats,
                                     const std::vector<int>& community, const Rational& alpha);

// Mirror test on the complement: significantly hypo-dense communities in the
// graph are hyper-dense in its complement. Uses swapped moments only; the
// complement is never materialized.
SignificanceResult hypo_significance_test(const Graph& g, const GraphStats& stats,
                                          const std::vector<int>& community,
                                          const Rational& alpha);

} // namespace sgm
