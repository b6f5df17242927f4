#ifndef ECQ_RATIONAL_HPP
#define ECQ_RATIONAL_HPP

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic over GMP integers.
 *
 * Every Rational is canonical on construction: denominator >= 1,
 * gcd(|num|, den) = 1, zero stored as 0/1. Equality is therefore
 * structural. All operations are pure; values are safe to share
 * across threads.
 */

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ecq/errors.hpp"

namespace ecq {

using Int = mpz_class;

class Rational {
public:
    // ---- constructors ----
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }
    Rational(long n, long d) : num_(n), den_(d) { canonicalize(); }

    // ---- accessors ----
    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    // ---- arithmetic (exact, result canonical) ----
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw division_by_zero_error();
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // ---- comparison ----
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // ---- text ----
    // Grammar: [sign]digits[/[sign]digits]. Throws parse_error on syntax,
    // zero_denominator_error on a zero denominator.
    static Rational parse(std::string_view text);

    // Canonical form: "n" when den == 1, else "n/d" with d > 1.
    std::string str() const;

private:
    void canonicalize();

    Int num_; // carries the sign
    Int den_; // always >= 1
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

Rational abs(const Rational& x);

// Naive height max(|num|, den); the search-bound metric.
Int height(const Rational& x);

struct IsqrtResult {
    Int root;   // floor(sqrt(n))
    bool exact; // root * root == n
};

// Integer square root by Newton iteration; no floating point involved.
// Throws negative_operand_error for n < 0.
IsqrtResult isqrt(const Int& n);

bool is_perfect_square(const Int& n);

// Exact nonnegative square root of x, when x is the square of a rational.
// For canonical n/d that happens iff n >= 0 and both n and d are perfect
// squares. Negative input yields nullopt.
std::optional<Rational> rational_sqrt(const Rational& x);

} // namespace ecq

#endif
