#pragma once

#include <string>
#include <vector>

#include "sgm/moments.hpp"

namespace sgm {

// Certified enclosure of the support extremes of the induced size at order c:
// ell_star <= min support and max support <= u_star, always.
struct SupportBounds {
    long long c = 0;
    long long ell_star = 0;   // max(0, c - alpha_upper)
    long long u_star = 0;     // min(gamma_c, floor(motzkin_straus))
    long long gamma_c = 0;    // densest c-vertex graph of the right kind
    Rational motzkin_straus;  // (c^2/2)(1 - 1/omega_upper)
};

SupportBounds support_bounds(const GraphStats& stats, long long c);

// Un-rounded 2 s2 / s1 + 1; requires s1 > 0.
Rational frechet_densest_lower_raw(const MomentSummary& mom);

// ceil(2 s2 / s1 + 1), a certified lower bound on the c-densest subgraph size.
BigInt frechet_densest_lower(const MomentSummary& mom);

struct DensityBounds {
    long long c = 0;
    BigInt frechet_lower;      // ceil(2 s2/s1 + 1); 0 when s1 = 0 (trivial)
    BigInt bd_densest_lower;   // ceil(min{frechet branch, Bhatia-Davis branch})
    BigInt bd_sparsest_upper;  // floor(s1 - sigma^2/(u_star - s1))
    std::vector<std::string> notes; // degenerate branches taken
};

// Inverted Bhatia-Davis bounds; ell_star/u_star come from `sb` and may be
// caller-tightened as long as they still enclose the true support.
DensityBounds bhatia_davis_bounds(const MomentSummary& mom, const SupportBounds& sb);

enum class Dominant { equal, bhatia_davis, frechet };

// Side-by-side un-rounded lower bounds on the c-densest subgraph size. With a
// certified ell_star the Bhatia-Davis form is never smaller; they coincide
// exactly when sigma2 * ell_star = 0.
struct DominanceReport {
    Rational frechet;
    Rational bhatia_davis;
    Dominant dominant = Dominant::equal;
};

DominanceReport dominance_report(const MomentSummary& mom, const SupportBounds& sb);

// Necessary condition for triangle-freeness: d2 <= (n-2) m.
bool triangle_free_consistency(const GraphStats& stats);

} // namespace sgm
