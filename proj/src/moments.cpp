#include "sgm/moments.hpp"

namespace sgm {

BigInt falling_factorial(long long t, long long s) {
    if (t < 0) throw ValidationError("falling_factorial requires t >= 0");
    if (s < 0) throw ValidationError("falling_factorial requires s >= 0");
    if (s > t) return 0;
    BigInt out = 1;
    for (long long i = 0; i < s; ++i) out *= static_cast<long>(t - i);
    return out;
}

BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0) throw ValidationError("binomial requires n, k >= 0");
    if (k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

namespace {

void fill_derived(MomentSummary& mom) {
    mom.mu2 = mom.s2 * Rational(2) + mom.s1;
    mom.sigma2 = mom.s2 * Rational(2) - mom.s1 * (mom.s1 - Rational(1));
}

void check_c_range(long long n, long long c) {
    if (n < 2) throw ValidationError("moments require a graph with n >= 2");
    if (c < 2 || c > n) {
        throw ValidationError("c = " + std::to_string(c) + " outside valid range 2.." +
                              std::to_string(n));
    }
}

MomentSummary moments_from_counts(long long n, long long m, long long d2, long long c) {
    check_c_range(n, c);
    MomentSummary mom;
    mom.c = c;
    mom.s1 = Rational(bigint(m) * falling_factorial(c, 2), falling_factorial(n, 2));
    if (n >= 4) {
        // 2 S2 = c^(3)/n^(3) * { (n-c)/(n-3) * d2 + (c-3)/(n-3) * m(m-1) }.
        BigInt numerator = falling_factorial(c, 3) *
                           (bigint(n - c) * bigint(d2) + bigint(c - 3) * bigint(m) * bigint(m - 1));
        mom.s2 = Rational(numerator, 2 * falling_factorial(n, 4));
    } else {
        return binomial_moments_pair_form(n, m, d2, c);
    }
    fill_derived(mom);
    return mom;
}

} // namespace

MomentSummary binomial_moments_pair_form(long long n, long long m, long long d2, long long c) {
    check_c_range(n, c);
    MomentSummary mom;
    mom.c = c;
    mom.s1 = Rational(bigint(m) * falling_factorial(c, 2), falling_factorial(n, 2));
    // An unordered pair of distinct edges spans 3 vertices when adjacent and 4
    // when disjoint; each term is added only when such pairs exist, so the
    // falling factorials below are never 0/0.
    BigInt adjacent_pairs = bigint(d2) / 2;
    BigInt disjoint_pairs = bigint(m) * bigint(m - 1) / 2 - adjacent_pairs;
    Rational s2;
    if (adjacent_pairs > 0) {
        s2 += Rational(adjacent_pairs * falling_factorial(c, 3), falling_factorial(n, 3));
    }
    if (disjoint_pairs > 0) {
        s2 += Rational(disjoint_pairs * falling_factorial(c, 4), falling_factorial(n, 4));
    }
    mom.s2 = s2;
    fill_derived(mom);
    return mom;
}

MomentSummary binomial_moments(const GraphStats& stats, long long c) {
    return moments_from_counts(stats.n, stats.m, stats.d2, c);
}

MomentSummary complement_moments(const GraphStats& stats, long long c) {
    return moments_from_counts(stats.n, stats.comp_m, stats.comp_d2, c);
}

} // namespace sgm
