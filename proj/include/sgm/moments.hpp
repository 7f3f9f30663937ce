#pragma once

#include "sgm/rational.hpp"
#include "sgm/stats.hpp"

namespace sgm {

// t(t-1)...(t-s+1); 0 when s > t, 1 when s = 0.
BigInt falling_factorial(long long t, long long s);

// C(n, k) exactly; 0 when k > n.
BigInt binomial(long long n, long long k);

// First two binomial moments of the induced-subgraph size at subset order c,
// plus the derived second-order quantities. All entries exact.
struct MomentSummary {
    long long c = 0;
    Rational s1;     // expected induced size
    Rational s2;     // E[M(M-1)]/2
    Rational mu2;    // E[M^2] = 2 s2 + s1
    Rational sigma2; // variance = 2 s2 - s1 (s1 - 1)
};

// Exact moments from the degree statistics alone, O(1) big-number operations
// once the stats are known. Requires 2 <= c <= n.
MomentSummary binomial_moments(const GraphStats& stats, long long c);

// Moments of the complement graph, from comp_m / comp_d2; the complement is
// never built. Satisfies s1(G) + s1(comp) = c(c-1)/2.
MomentSummary complement_moments(const GraphStats& stats, long long c);

// Pair-counting route: splits the edge pairs into adjacent and disjoint ones.
// Valid for every n >= 2 and equal to the packaged formula whenever n >= 4;
// binomial_moments uses it for n in {2, 3} where the packaged formula would
// divide by zero.
MomentSummary binomial_moments_pair_form(long long n, long long m, long long d2, long long c);

} // namespace sgm
