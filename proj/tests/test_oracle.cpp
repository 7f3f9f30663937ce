#include "doctest.h"
#include "helpers.hpp"
#include "sgm/moments.hpp"
#include "sgm/oracle.hpp"

using namespace sgm;
using namespace sgm::oracle;

TEST_CASE("exact distributions on the named fixtures") {
    auto star5 = exact_distribution(star(5), 3);
    CHECK(star5.total == 10);
    CHECK(star5.counts.at(0) == 4);
    CHECK(star5.counts.at(2) == 6);
    CHECK(star5.counts.size() == 2);

    auto k4 = exact_distribution(complete(4), 2);
    CHECK(k4.counts.at(1) == 6);
    CHECK(k4.counts.size() == 1);

    auto m3 = exact_distribution(matching(3), 2);
    CHECK(m3.counts.at(0) == 12);
    CHECK(m3.counts.at(1) == 3);
}

TEST_CASE("summary of the star distribution") {
    auto dist = exact_distribution(star(5), 3);
    auto s = exact_summary(dist);
    CHECK(s.ell == 0);
    CHECK(s.u == 2);
    CHECK(s.s1 == Rational(BigInt(6), BigInt(5)));
    CHECK(s.count_at_ell == 4);
    CHECK(s.count_at_u == 6);

    auto k5 = exact_summary(exact_distribution(complete(5), 3));
    CHECK(k5.sigma2.is_zero());
}

TEST_CASE("exact tails") {
    auto dist = exact_distribution(star(9), 3);
    CHECK(exact_tail(dist, 0) == Rational(1));
    CHECK(exact_tail(dist, 2) == Rational(BigInt(1), BigInt(3)));
    CHECK(exact_tail(dist, 3) == Rational(0));
}

TEST_CASE("closed forms equal enumeration for every family") {
    for (long long n = 2; n <= 10; ++n) {
        for (long long c = 2; c <= n; ++c) {
            auto direct = exact_distribution(complete(n), c);
            auto closed = family_distribution(ClosedFormFamily::complete, n, c);
            CHECK(direct.counts == closed.counts);
            auto sdirect = exact_distribution(star(n), c);
            auto sclosed = family_distribution(ClosedFormFamily::star, n, c);
            CHECK(sdirect.counts == sclosed.counts);
        }
    }
    for (long long d = 1; d <= 5; ++d) {
        for (long long c = 2; c <= 2 * d; ++c) {
            auto bdirect = exact_distribution(complete_bipartite(d, d), c);
            auto bclosed = family_distribution(ClosedFormFamily::complete_bipartite_balanced, d, c);
            CHECK(bdirect.counts == bclosed.counts);
            auto mdirect = exact_distribution(matching(d), c);
            auto mclosed = family_distribution(ClosedFormFamily::matching, d, c);
            CHECK(mdirect.counts == mclosed.counts);
        }
    }
}

TEST_CASE("matching counts instantiate the multinomial identity") {
    // C(6,2) = 15 = 12 + 3.
    auto dist = family_distribution(ClosedFormFamily::matching, 3, 2);
    CHECK(dist.total == 15);
    CHECK(dist.counts.at(0) == 12);
    CHECK(dist.counts.at(1) == 3);
}

TEST_CASE("trivial counts") {
    auto s6 = exact_trivial_counts(star(6), 2);
    CHECK(s6.independent_sets == 10);
    CHECK(s6.cliques == 5);

    auto k5 = exact_trivial_counts(complete(5), 3);
    CHECK(k5.cliques == 10);
    CHECK(k5.independent_sets == 0);

    auto p4 = exact_trivial_counts(path(4), 3);
    REQUIRE(p4.subtrees.has_value());
    CHECK(*p4.subtrees == 2);

    auto k33 = exact_trivial_counts(complete_bipartite(3, 3), 2);
    REQUIRE(k33.balanced_bicliques.has_value());
    CHECK(*k33.balanced_bicliques == 9);

    CHECK_FALSE(exact_trivial_counts(complete(4), 2).subtrees.has_value());
}

TEST_CASE("budget refusal names the required budget") {
    try {
        exact_distribution(complete(30), 15);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(e.required_budget() == "155117520");
    }
    CHECK_NOTHROW(exact_distribution(complete(30), 15, 160'000'000));
}

TEST_CASE("independence and clique numbers by search") {
    CHECK(independence_number(complete(6)) == 1);
    CHECK(clique_number(complete(6)) == 6);
    CHECK(independence_number(star(7)) == 6);
    CHECK(clique_number(star(7)) == 2);
    CHECK(independence_number(empty_graph(5)) == 5);
    CHECK(clique_number(empty_graph(5)) == 1);
    CHECK(independence_number(matching(4)) == 4);
    CHECK(independence_number(path(6)) == 3);
    // 5-cycle: alpha = omega = 2.
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(independence_number(c5) == 2);
    CHECK(clique_number(c5) == 2);
}

TEST_CASE("enumeration counts every subset exactly once") {
    for (int n = 2; n <= 5; ++n) {
        sgm_test::for_each_graph(n, [&](const Graph& g) {
            for (long long c = 2; c <= n; ++c) {
                auto dist = exact_distribution(g, c);
                BigInt sum = 0;
                for (const auto& [k, cnt] : dist.counts) {
                    CHECK(k >= 0);
                    CHECK(k <= c * (c - 1) / 2);
                    sum += cnt;
                }
                CHECK(sum == binomial(n, c));
            }
        });
    }
}
