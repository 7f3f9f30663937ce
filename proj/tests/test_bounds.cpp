#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "sgm/bounds.hpp"
#include "sgm/oracle.hpp"

using namespace sgm;

namespace {

Rational rat(long long num, long long den = 1) {
    return Rational(bigint(num), bigint(den));
}

// Theorem-style expanded closed form of the Frechet densest lower bound.
Rational expanded_frechet(const GraphStats& s, long long c) {
    Rational degree_term(bigint(s.d2), bigint(s.m));
    Rational mix = Rational(bigint(s.n - c), bigint(s.n - 3)) * degree_term +
                   (Rational(1) - Rational(bigint(s.n - c), bigint(s.n - 3))) * rat(s.m - 1);
    return Rational(bigint(c - 2), bigint(s.n - 2)) * mix + Rational(1);
}

} // namespace

TEST_CASE("support bounds on the named fixtures") {
    GraphStats k6 = compute_stats(complete(6));
    SupportBounds sbk = support_bounds(k6, 4);
    CHECK(sbk.u_star == 6);
    CHECK(sbk.gamma_c == 6);
    CHECK(sbk.ell_star == 1); // greedy maximal matching of size 3

    GraphStats s6 = compute_stats(star(6));
    SupportBounds sbs = support_bounds(s6, 3);
    CHECK(sbs.gamma_c == 2);
    CHECK(sbs.u_star == 2);

    GraphStats e5 = compute_stats(empty_graph(5));
    SupportBounds sbe = support_bounds(e5, 3);
    CHECK(sbe.ell_star == 0);
    CHECK(sbe.u_star == 0);
    CHECK(sbe.motzkin_straus.is_zero());

    CHECK_THROWS_AS(support_bounds(k6, 1), ValidationError);
    CHECK_THROWS_AS(support_bounds(k6, 7), ValidationError);
}

TEST_CASE("Frechet lower bound closed forms") {
    for (long long n = 4; n <= 9; ++n) {
        GraphStats kn = compute_stats(complete(n));
        for (long long c = 2; c <= n; ++c) {
            CHECK(frechet_densest_lower(binomial_moments(kn, c)) == bigint(c * (c - 1) / 2));
        }
        GraphStats sn = compute_stats(star(n));
        for (long long c = 2; c <= n - 1; ++c) {
            CHECK(frechet_densest_lower(binomial_moments(sn, c)) == bigint(c - 1));
        }
    }
    for (long long d = 2; d <= 6; ++d) {
        GraphStats md = compute_stats(matching(d));
        for (long long c = 2; c <= 2 * d - 1; c += 2) {
            Rational expected = Rational(bigint(c - 2), bigint(2)) *
                                    Rational(bigint(c - 3), bigint(2 * d - 3)) +
                                Rational(1);
            CHECK(frechet_densest_lower(binomial_moments(md, c)) == expected.ceil());
        }
    }
    CHECK_THROWS_AS(frechet_densest_lower(binomial_moments(compute_stats(empty_graph(5)), 3)),
                    ValidationError);
}

TEST_CASE("expanded Theorem-style form equals 2 s2 / s1 + 1") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        long long n = 4 + static_cast<long long>(rng() % 12);
        long long m = 1 + static_cast<long long>(rng() % (n * (n - 1) / 2));
        GraphStats stats = compute_stats(random_gnm(n, m, rng()));
        for (long long c = 2; c <= n; ++c) {
            CHECK(frechet_densest_lower_raw(binomial_moments(stats, c)) ==
                  expanded_frechet(stats, c));
        }
    }
}

TEST_CASE("Bhatia-Davis fixtures") {
    // Star: the sparsest upper bound reaches 0 for every feasible c.
    for (long long n = 5; n <= 9; ++n) {
        GraphStats sn = compute_stats(star(n));
        for (long long c = 2; c <= n - 1; ++c) {
            MomentSummary mom = binomial_moments(sn, c);
            SupportBounds sb = support_bounds(sn, c);
            sb.u_star = c - 1; // exact u for a star
            DensityBounds db = bhatia_davis_bounds(mom, sb);
            CHECK(db.bd_sparsest_upper == 0);
        }
    }
    // Constant distribution: the densest branch degenerates to the Frechet one.
    GraphStats k5 = compute_stats(complete(5));
    MomentSummary mom = binomial_moments(k5, 3);
    SupportBounds sb = support_bounds(k5, 3);
    sb.ell_star = 3;
    DensityBounds db = bhatia_davis_bounds(mom, sb);
    CHECK(db.bd_densest_lower == 3);
    CHECK(db.frechet_lower == 3);
    CHECK_FALSE(db.notes.empty());
}

TEST_CASE("inconsistent overrides are rejected") {
    GraphStats s8 = compute_stats(star(8));
    MomentSummary mom = binomial_moments(s8, 4); // s1 = 12/8 = 3/2
    SupportBounds sb = support_bounds(s8, 4);
    SUBCASE("ell above the mean") {
        sb.ell_star = 2;
        CHECK_THROWS_AS(bhatia_davis_bounds(mom, sb), ValidationError);
    }
    SUBCASE("u below the mean") {
        sb.u_star = 1;
        CHECK_THROWS_AS(bhatia_davis_bounds(mom, sb), ValidationError);
    }
}

TEST_CASE("soundness against the oracle on an exhaustive sweep") {
    for (int n = 2; n <= 5; ++n) {
        sgm_test::for_each_graph(n, [&](const Graph& g) {
            GraphStats stats = compute_stats(g);
            for (long long c = 2; c <= n; ++c) {
                auto summary = oracle::exact_summary(oracle::exact_distribution(g, c));
                MomentSummary mom = binomial_moments(stats, c);
                SupportBounds sb = support_bounds(stats, c);
                CHECK(sb.ell_star <= summary.ell);
                CHECK(summary.u <= sb.u_star);
                DensityBounds db = bhatia_davis_bounds(mom, sb);
                CHECK(db.bd_densest_lower <= bigint(summary.u));
                CHECK(db.bd_sparsest_upper >= bigint(summary.ell));
                CHECK(db.bd_densest_lower <= bigint(sb.u_star));
                CHECK(db.bd_sparsest_upper >= bigint(sb.ell_star));
                if (stats.m >= 1) {
                    CHECK(frechet_densest_lower(mom) <= bigint(summary.u));
                }
            }
        });
    }
}

TEST_CASE("dominance report") {
    // ell_star = 0 forces exact equality of the two raw bounds.
    GraphStats s9 = compute_stats(star(9));
    for (long long c = 2; c <= 8; ++c) {
        DominanceReport rep = dominance_report(binomial_moments(s9, c), support_bounds(s9, c));
        CHECK(rep.dominant == Dominant::equal);
        CHECK(rep.frechet == rep.bhatia_davis);
    }
    // Constant distribution with ell_star = s1.
    GraphStats k8 = compute_stats(complete(8));
    SupportBounds sbk = support_bounds(k8, 4);
    sbk.ell_star = 6;
    DominanceReport repk = dominance_report(binomial_moments(k8, 4), sbk);
    CHECK(repk.dominant == Dominant::equal);

    // K4 plus an isolated vertex: 0 < ell < u, Bhatia-Davis strictly dominates.
    Graph k4_iso(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    GraphStats stats = compute_stats(k4_iso);
    auto summary = oracle::exact_summary(oracle::exact_distribution(k4_iso, 4));
    CHECK(summary.ell == 3);
    CHECK(summary.u == 6);
    SupportBounds sb = support_bounds(stats, 4);
    sb.ell_star = summary.ell;
    DominanceReport rep = dominance_report(binomial_moments(stats, 4), sb);
    CHECK(rep.bhatia_davis >= rep.frechet);
    CHECK(rep.dominant == Dominant::bhatia_davis);
    CHECK(rep.bhatia_davis == rat(6)); // equality case of the inverted bound
}

TEST_CASE("equality characterizations on small graphs") {
    for (int n = 2; n <= 5; ++n) {
        sgm_test::for_each_graph(n, [&](const Graph& g) {
            GraphStats stats = compute_stats(g);
            if (stats.m == 0) return;
            for (long long c = 2; c <= n; ++c) {
                auto dist = oracle::exact_distribution(g, c);
                auto summary = oracle::exact_summary(dist);
                MomentSummary mom = binomial_moments(stats, c);
                std::size_t support = dist.counts.size();
                bool frechet_eq = frechet_densest_lower_raw(mom) == rat(summary.u);
                CHECK(frechet_eq == (support == 1 || (support == 2 && summary.ell == 0)));
                Rational bd_rhs = (rat(summary.u) - mom.s1) * (mom.s1 - rat(summary.ell));
                CHECK((mom.sigma2 == bd_rhs) == (support <= 2));
                CHECK(mom.sigma2 <= bd_rhs);
            }
        });
    }
}

TEST_CASE("triangle-free consistency flag") {
    CHECK(triangle_free_consistency(compute_stats(star(8))));
    CHECK(triangle_free_consistency(compute_stats(complete_bipartite(3, 4))));
    CHECK_FALSE(triangle_free_consistency(compute_stats(complete(3))));
}

TEST_CASE("Frechet equality families attain the densest size") {
    // Complete graphs, stars and the single-edge graph meet the un-rounded
    // bound exactly for every 4 <= c <= n-1.
    for (long long n = 5; n <= 9; ++n) {
        GraphStats kn = compute_stats(complete(n));
        GraphStats sn = compute_stats(star(n));
        Graph one_edge(n, {{0, 1}});
        GraphStats on = compute_stats(one_edge);
        for (long long c = 4; c <= n - 1; ++c) {
            auto u_of = [&](const Graph& g) {
                return oracle::exact_summary(oracle::exact_distribution(g, c)).u;
            };
            CHECK(frechet_densest_lower_raw(binomial_moments(kn, c)) == rat(u_of(complete(n))));
            CHECK(frechet_densest_lower_raw(binomial_moments(sn, c)) == rat(u_of(star(n))));
            CHECK(frechet_densest_lower_raw(binomial_moments(on, c)) == rat(u_of(one_edge)));
        }
    }
}

TEST_CASE("seeded random instance stays enclosed") {
    Graph g = random_gnm(10, 22, 1);
    GraphStats stats = compute_stats(g);
    auto exact = oracle::exact_summary(oracle::exact_distribution(g, 5));
    MomentSummary mom = binomial_moments(stats, 5);
    SupportBounds sb = support_bounds(stats, 5);
    DensityBounds db = bhatia_davis_bounds(mom, sb);
    CHECK(db.bd_densest_lower <= bigint(exact.u));
    CHECK(db.bd_sparsest_upper >= bigint(exact.ell));
    CHECK(frechet_densest_lower(mom) <= bigint(exact.u));
}
