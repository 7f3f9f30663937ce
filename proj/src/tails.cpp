#include "sgm/tails.hpp"

#include <algorithm>

namespace sgm {

namespace {

Rational rat(long long v) { return Rational(bigint(v)); }

} // namespace

Rational chung_erdos_lower(const MomentSummary& mom) {
    if (mom.mu2.is_zero()) {
        return Rational(0); // edgeless: P(M >= 1) = 0 exactly
    }
    return mom.s1 * mom.s1 / mom.mu2;
}

Rational petrov_lower(const MomentSummary& mom, long long t) {
    if (mom.mu2.is_zero()) {
        throw ValidationError("Petrov bound requires mu2 > 0");
    }
    if (t < 1 || rat(t) > mom.s1) {
        throw ValidationError("Petrov bound valid only for 1 <= t <= s1");
    }
    Rational shifted = mom.s1 - rat(t) + Rational(1);
    return shifted * shifted / mom.mu2;
}

Rational factorial_upper(const MomentSummary& mom, long long t) {
    if (t < 1) {
        throw ValidationError("factorial moment bound requires t >= 1");
    }
    if (t == 1) {
        // t^(2) = 0: fall back to the first-order Markov bound.
        return min(Rational(1), mom.s1);
    }
    return min(Rational(1), mom.s2 * Rational(2) / rat(t * (t - 1)));
}

Rational cantelli_upper(const MomentSummary& mom, const Rational& t) {
    if (t <= mom.s1) {
        return Rational(1); // no information below the mean
    }
    if (mom.sigma2.is_zero()) {
        return Rational(0); // constant distribution, t above it
    }
    Rational gap = mom.s1 - t;
    return mom.sigma2 / (gap * gap + mom.sigma2);
}

Rational complement_petrov_upper(const MomentSummary& mom, const MomentSummary& comp,
                                 long long c, long long t) {
    const long long gamma = c * (c - 1) / 2;
    if (comp.mu2.is_zero()) {
        throw ValidationError("complement Petrov bound requires a complement with edges");
    }
    if (rat(t) < mom.s1 + Rational(1) || t > gamma) {
        throw ValidationError("complement Petrov bound valid only for s1 + 1 <= t <= c(c-1)/2");
    }
    // P(M >= t) = 1 - P(comp M >= gamma - t + 1), then Petrov on the
    // complement tail; its shifted numerator collapses to (t - s1)^2.
    Rational gap = rat(t) - mom.s1;
    return clamp_unit(Rational(1) - gap * gap / comp.mu2);
}

TailReport combined_upper_tail(const MomentSummary& mom, const MomentSummary& comp,
                               long long t) {
    const long long c = mom.c;
    const long long gamma = c * (c - 1) / 2;
    if (t < 0 || t > gamma) {
        throw ValidationError("threshold t = " + std::to_string(t) +
                              " outside valid range 0.." + std::to_string(gamma));
    }
    TailReport report;
    report.c = c;
    report.t = t;
    report.chung_erdos_lb = chung_erdos_lower(mom);

    if (t == 0) {
        report.combined_ub = Rational(1);
        report.notes.push_back("t = 0: tail probability is identically 1");
        return report;
    }

    if (!mom.mu2.is_zero() && rat(t) <= mom.s1) {
        report.petrov_lb = petrov_lower(mom, t);
    } else if (mom.mu2.is_zero()) {
        report.notes.push_back("Petrov lower bound absent: graph is edgeless");
    } else {
        report.notes.push_back("Petrov lower bound absent: t exceeds s1");
    }

    report.factorial_ub = factorial_upper(mom, t);
    if (t == 1) {
        report.notes.push_back("t = 1: factorial bound degenerates, first-order Markov used");
    }
    report.cantelli_ub = cantelli_upper(mom, rat(t));

    if (comp.mu2.is_zero()) {
        report.notes.push_back("complement Petrov bound absent: complement is edgeless");
    } else if (rat(t) < mom.s1 + Rational(1)) {
        report.notes.push_back("complement Petrov bound absent: t < s1 + 1");
    } else {
        report.complement_ub = complement_petrov_upper(mom, comp, c, t);
    }

    Rational combined(1);
    for (const auto& term : {report.factorial_ub, report.cantelli_ub, report.complement_ub}) {
        if (term && *term < combined) combined = *term;
    }
    report.combined_ub = combined;
    return report;
}

TailReport combined_upper_tail(const GraphStats& stats, long long c, long long t) {
    return combined_upper_tail(binomial_moments(stats, c), complement_moments(stats, c), t);
}

PrintedVariants printed_variants(const MomentSummary& mom, const MomentSummary& comp,
                                 long long t) {
    PrintedVariants pv;
    if (t >= 2) {
        pv.factorial_half = mom.s2 / rat(t * (t - 1));
    }
    if (!comp.mu2.is_zero()) {
        Rational shifted = mom.s1 - rat(t) + Rational(1);
        pv.complement_shifted = Rational(1) - shifted * shifted / comp.mu2;
    }
    return pv;
}

CountBound count_bound(const Graph& g, const GraphStats& stats, long long c, CountKind kind) {
    if (c < 2 || c > stats.n) {
        throw ValidationError("c = " + std::to_string(c) + " outside valid range 2.." +
                              std::to_string(stats.n));
    }
    CountBound out;
    out.c = c;
    out.kind = kind;
    out.binomial_total = binomial(stats.n, c);
    const MomentSummary mom = binomial_moments(stats, c);

    switch (kind) {
        case CountKind::independent_sets: {
            // i(c, 0) = C(n,c) P(M = 0) <= C(n,c) (1 - Chung-Erdos lower bound).
            out.bound = Rational(out.binomial_total) * (Rational(1) - chung_erdos_lower(mom));
            break;
        }
        case CountKind::cliques: {
            TailReport rep = combined_upper_tail(mom, complement_moments(stats, c), c * (c - 1) / 2);
            out.bound = Rational(out.binomial_total) * rep.combined_ub;
            break;
        }
        case CountKind::subtrees: {
            if (!g.is_tree()) {
                throw ValidationError("subtree counting requires a tree");
            }
            TailReport rep = combined_upper_tail(mom, complement_moments(stats, c), c - 1);
            out.bound = Rational(out.binomial_total) * rep.combined_ub;
            break;
        }
        case CountKind::balanced_bicliques: {
            if (!stats.is_bipartite) {
                throw ValidationError("balanced biclique counting requires a bipartite graph");
            }
            if (c % 2 != 0) {
                throw ValidationError("balanced biclique counting requires an even c");
            }
            TailReport rep = combined_upper_tail(mom, complement_moments(stats, c), c * c / 4);
            out.bound = Rational(out.binomial_total) * rep.combined_ub;
            break;
        }
    }
    return out;
}

TreeAggregates tree_aggregate_bounds(const Graph& g, const GraphStats& stats) {
    if (!g.is_tree()) {
        throw ValidationError("aggregate counting bounds require a tree");
    }
    TreeAggregates agg;
    const long long n = stats.n;
    // Empty set plus the n singletons, then the per-order bounds. No tree has
    // an independent set of all n >= 2 vertices, so that term is dropped.
    agg.independent_sets_total = Rational(1) + rat(n);
    for (long long c = 2; c <= n - 1; ++c) {
        agg.independent_sets_total += count_bound(g, stats, c, CountKind::independent_sets).bound;
    }
    agg.subtrees_total = Rational(1);
    for (long long c = 2; c <= n; ++c) {
        agg.subtrees_total += count_bound(g, stats, c, CountKind::subtrees).bound;
    }
    return agg;
}

namespace {

long long community_edge_count(const Graph& g, const std::vector<int>& community) {
    std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : community) {
        if (v < 0 || v >= g.vertex_count()) {
            throw ValidationError("community vertex " + std::to_string(v) + " out of range");
        }
        if (member[v]) {
            throw ValidationError("duplicate community vertex " + std::to_string(v));
        }
        member[v] = 1;
    }
    long long inside = 0;
    for (int v : community) {
        for (int w : g.neighbors(v)) {
            if (w > v && member[w]) ++inside;
        }
    }
    return inside;
}

SignificanceResult run_significance(const MomentSummary& mom, const MomentSummary& comp,
                                    long long m_community, const Rational& alpha) {
    if (alpha <= Rational(0) || alpha >= Rational(1)) {
        throw ValidationError("alpha must lie strictly between 0 and 1");
    }
    SignificanceResult res;
    res.c = mom.c;
    res.m_community = m_community;
    res.s1 = mom.s1;
    res.tail_bound = combined_upper_tail(mom, comp, m_community).combined_ub;
    res.significant = res.tail_bound <= alpha;
    return res;
}

} // namespace

SignificanceResult significance_test(const Graph& g, const GraphStats& stats,
                                     const std::vector<int>& community, const Rational& alpha) {
    const long long c = static_cast<long long>(community.size());
    if (c < 2 || c > stats.n) {
        throw ValidationError("community size must lie in 2..n");
    }
    long long m_community = community_edge_count(g, community);
    return run_significance(binomial_moments(stats, c), complement_moments(stats, c),
                            m_community, alpha);
}

SignificanceResult hypo_significance_test(const Graph& g, const GraphStats& stats,
                                          const std::vector<int>& community,
                                          const Rational& alpha) {
    const long long c = static_cast<long long>(community.size());
    if (c < 2 || c > stats.n) {
        throw ValidationError("community size must lie in 2..n");
    }
    long long m_community = community_edge_count(g, community);
    long long comp_m_community = c * (c - 1) / 2 - m_community;
    return run_significance(complement_moments(stats, c), binomial_moments(stats, c),
                            comp_m_community, alpha);
}

} // namespace sgm
