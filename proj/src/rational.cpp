#include "sgm/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace sgm {

std::string to_string(const BigInt& value) {
    return value.get_str();
}

double to_double(const BigInt& value) {
    return value.get_d();
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    canonicalize();
}

void Rational::canonicalize() {
    if (den_ == 0) {
        throw ValidationError("rational with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw ValidationError("empty rational literal");
    }
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string p = s.substr(0, slash);
        std::string q = s.substr(slash + 1);
        if (p.empty() || q.empty()) {
            throw ValidationError("malformed rational literal '" + s + "'");
        }
        try {
            return Rational(BigInt(p, 10), BigInt(q, 10));
        } catch (const std::invalid_argument&) {
            throw ValidationError("malformed rational literal '" + s + "'");
        }
    }
    auto dot = s.find('.');
    try {
        if (dot == std::string::npos) {
            return Rational(BigInt(s, 10));
        }
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+") {
            throw ValidationError("malformed rational literal '" + s + "'");
        }
        BigInt den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(BigInt(digits, 10), den);
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed rational literal '" + s + "'");
    }
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

BigInt Rational::ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    canonicalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    canonicalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    canonicalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) {
        throw ValidationError("division of rational by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    canonicalize();
    return *this;
}

int Rational::cmp(const Rational& lhs, const Rational& rhs) {
    // Denominators are positive, so cross-multiplication preserves order.
    BigInt a = lhs.num_ * rhs.den_;
    BigInt b = rhs.num_ * lhs.den_;
    return ::cmp(a, b);
}

std::string Rational::to_fraction_string() const {
    if (den_ == 1) {
        return num_.get_str();
    }
    return num_.get_str() + "/" + den_.get_str();
}

double Rational::to_double() const {
    mpq_class q(num_, den_);
    return q.get_d();
}

std::string Rational::to_decimal(int significant_digits) const {
    if (significant_digits < 1) significant_digits = 1;
    if (num_ == 0) return "0";

    BigInt a = abs(num_);
    const BigInt& b = den_;

    // Decimal exponent e with 10^e <= a/b < 10^(e+1).
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
    auto pow10 = [](long k) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
        return p;
    };
    auto less_than_pow10 = [&](long k) {
        // a/b < 10^k ?
        return k >= 0 ? a < b * pow10(k) : a * pow10(-k) < b;
    };
    while (!less_than_pow10(e + 1)) ++e;
    while (less_than_pow10(e)) --e;

    // Scale to exactly `significant_digits` integer digits, then round half-even.
    long shift = significant_digits - 1 - e;
    BigInt scaled_num = a, scaled_den = b;
    if (shift >= 0) {
        scaled_num *= pow10(shift);
    } else {
        scaled_den *= pow10(-shift);
    }
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
    BigInt twice_r = 2 * r;
    if (twice_r > scaled_den || (twice_r == scaled_den && mpz_odd_p(q.get_mpz_t()))) {
        q += 1;
    }
    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) > significant_digits) {
        // Rounding carried into a new leading digit (e.g. 999.96 -> 1000.0).
        digits.pop_back();
        ++e;
    }

    std::string out;
    if (e >= significant_digits || e < -5) {
        out = digits.substr(0, 1);
        std::string rest = digits.substr(1);
        while (rest.size() > 1 && rest.back() == '0') rest.pop_back();
        if (!rest.empty() && rest != "0") out += "." + rest;
        out += "e" + std::to_string(e);
    } else if (e >= 0) {
        out = digits.substr(0, e + 1);
        std::string rest = digits.substr(e + 1);
        while (!rest.empty() && rest.back() == '0') rest.pop_back();
        if (!rest.empty()) out += "." + rest;
    } else {
        out = "0.";
        for (long i = 0; i < -e - 1; ++i) out += '0';
        std::string rest = digits;
        while (rest.size() > 1 && rest.back() == '0') rest.pop_back();
        out += rest;
    }
    return is_negative() ? "-" + out : out;
}

Rational clamp_unit(const Rational& value) {
    if (value.is_negative()) return Rational(0);
    if (Rational(1) < value) return Rational(1);
    return value;
}

} // namespace sgm
