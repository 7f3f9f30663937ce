#include "sgm/bounds.hpp"

#include <algorithm>

namespace sgm {

SupportBounds support_bounds(const GraphStats& stats, long long c) {
    if (c < 2 || c > stats.n) {
        throw ValidationError("c = " + std::to_string(c) + " outside valid range 2.." +
                              std::to_string(stats.n));
    }
    SupportBounds sb;
    sb.c = c;
    sb.gamma_c = stats.is_bipartite ? (c / 2) * ((c + 1) / 2) : c * (c - 1) / 2;
    // Motzkin-Straus cap; monotone in omega, so an upper bound on omega keeps
    // it valid. An edgeless graph has omega_upper = 1 and the cap collapses to 0.
    sb.motzkin_straus =
        Rational(bigint(c) * bigint(c) * bigint(stats.omega_upper - 1), 2 * bigint(stats.omega_upper));
    BigInt ms_floor = sb.motzkin_straus.floor();
    BigInt u = std::min(BigInt(bigint(sb.gamma_c)), ms_floor);
    sb.u_star = u.get_si();
    sb.ell_star = std::max(0LL, c - stats.alpha_upper);
    return sb;
}

Rational frechet_densest_lower_raw(const MomentSummary& mom) {
    if (mom.s1.is_zero()) {
        throw ValidationError("Frechet bound undefined: s1 = 0 (edgeless graph)");
    }
    return mom.s2 * Rational(2) / mom.s1 + Rational(1);
}

BigInt frechet_densest_lower(const MomentSummary& mom) {
    return frechet_densest_lower_raw(mom).ceil();
}

DensityBounds bhatia_davis_bounds(const MomentSummary& mom, const SupportBounds& sb) {
    DensityBounds out;
    out.c = mom.c;
    const Rational ell(bigint(sb.ell_star));
    const Rational u(bigint(sb.u_star));
    const Rational& s1 = mom.s1;

    if (ell > s1 || u < s1) {
        throw ValidationError(
            "inconsistent support bounds: require ell_star <= s1 <= u_star for certified input");
    }

    // Densest side: min of the Frechet branch and the Bhatia-Davis branch,
    // skipping whichever is degenerate.
    bool have_frechet = !s1.is_zero();
    bool have_bd = ell < s1;
    if (!have_frechet) {
        out.frechet_lower = 0;
        out.bd_densest_lower = 0;
        out.notes.push_back("s1 = 0: Frechet bound undefined; u(c) >= 0 reported");
    } else {
        Rational frechet = frechet_densest_lower_raw(mom);
        out.frechet_lower = frechet.ceil();
        if (have_bd) {
            Rational bd = s1 + mom.sigma2 / (s1 - ell);
            out.bd_densest_lower = min(frechet, bd).ceil();
        } else {
            out.bd_densest_lower = out.frechet_lower;
            out.notes.push_back(
                "s1 = ell_star; Bhatia-Davis densest branch degenerate, Frechet branch used alone");
        }
    }

    // Sparsest side.
    if (u > s1) {
        Rational sparse = s1 - mom.sigma2 / (u - s1);
        out.bd_sparsest_upper = sparse.floor();
    } else {
        // u_star = s1: the variable is constant at s1, which must be integral.
        if (!mom.sigma2.is_zero() || !s1.is_integer()) {
            throw ValidationError(
                "inconsistent support bounds: u_star = s1 but the distribution is not constant");
        }
        out.bd_sparsest_upper = s1.num();
        out.notes.push_back("u_star = s1; distribution constant, sparsest bound equals s1");
    }
    return out;
}

DominanceReport dominance_report(const MomentSummary& mom, const SupportBounds& sb) {
    if (mom.s1.is_zero()) {
        throw ValidationError("dominance report requires m >= 1");
    }
    DominanceReport rep;
    rep.frechet = frechet_densest_lower_raw(mom);
    const Rational ell(bigint(sb.ell_star));
    if (ell < mom.s1) {
        rep.bhatia_davis = mom.s1 + mom.sigma2 / (mom.s1 - ell);
    } else if (ell == mom.s1 && mom.sigma2.is_zero()) {
        // Constant distribution; the Bhatia-Davis branch tends to s1.
        rep.bhatia_davis = mom.s1;
    } else {
        throw ValidationError("inconsistent support bounds: ell_star > s1, or ell_star = s1 "
                              "with positive variance");
    }
    if (rep.bhatia_davis == rep.frechet) {
        rep.dominant = Dominant::equal;
    } else if (rep.frechet < rep.bhatia_davis) {
        rep.dominant = Dominant::bhatia_davis;
    } else {
        rep.dominant = Dominant::frechet;
    }
    return rep;
}

bool triangle_free_consistency(const GraphStats& stats) {
    return stats.d2 <= (stats.n - 2) * stats.m;
}

} // namespace sgm
