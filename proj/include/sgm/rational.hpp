#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "sgm/errors.hpp"

namespace sgm {

// Arbitrary-precision signed integer. All moment arithmetic runs on these;
// n^(4) already overflows 64 bits near n = 10^5.
using BigInt = mpz_class;

// mpz_class has no long long constructor; go through long (64-bit here).
inline BigInt bigint(long long value) { return BigInt(static_cast<long>(value)); }

std::string to_string(const BigInt& value);
double to_double(const BigInt& value);

// Exact rational number. Always in lowest terms with a positive denominator;
// no operation ever rounds.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(static_cast<long>(value)), den_(1) {}
    explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);

    // Accepts "p/q", integers, and plain decimals ("0.05" -> 1/20).
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    BigInt floor() const;
    BigInt ceil() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs); // throws ValidationError on zero divisor

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend bool operator!=(const Rational& lhs, const Rational& rhs) { return !(lhs == rhs); }
    friend bool operator<(const Rational& lhs, const Rational& rhs) { return cmp(lhs, rhs) < 0; }
    friend bool operator<=(const Rational& lhs, const Rational& rhs) { return cmp(lhs, rhs) <= 0; }
    friend bool operator>(const Rational& lhs, const Rational& rhs) { return cmp(lhs, rhs) > 0; }
    friend bool operator>=(const Rational& lhs, const Rational& rhs) { return cmp(lhs, rhs) >= 0; }

    static int cmp(const Rational& lhs, const Rational& rhs);

    // Canonical exact form: "p/q", or just "p" when the value is an integer.
    std::string to_fraction_string() const;
    double to_double() const;

    // Presentation-layer decimal rendering, round-half-even, fixed number of
    // significant digits. The computational core never touches this.
    std::string to_decimal(int significant_digits = 6) const;

private:
    void canonicalize();

    BigInt num_;
    BigInt den_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Clamp into [0, 1]; tail bounds are presented as probabilities.
Rational clamp_unit(const Rational& value);

} // namespace sgm
