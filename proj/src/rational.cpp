#include "ecq/rational.hpp"

#include <cctype>
#include <ostream>

namespace ecq {

void Rational::canonicalize() {
    if (den_ == 0)
        throw zero_denominator_error();
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

namespace {

// One signed digit run out of `text`, starting at `pos`.
Int parse_signed_digits(std::string_view text, size_t& pos) {
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = (text[pos] == '-');
        ++pos;
    }
    const size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == start)
        throw parse_error("expected digits in rational literal");
    Int value(std::string(text.substr(start, pos - start)));
    return negative ? Int(-value) : value;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    size_t pos = 0;
    Int n = parse_signed_digits(text, pos);
    if (pos == text.size())
        return Rational(std::move(n));
    if (text[pos] != '/')
        throw parse_error("unexpected character in rational literal");
    ++pos;
    Int d = parse_signed_digits(text, pos);
    if (pos != text.size())
        throw parse_error("trailing characters after rational literal");
    return Rational(std::move(n), std::move(d));
}

std::string Rational::str() const {
    if (den_ == 1)
        return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

Rational abs(const Rational& x) {
    return x.is_negative() ? -x : x;
}

Int height(const Rational& x) {
    Int n = ::abs(x.num());
    return n > x.den() ? n : x.den();
}

IsqrtResult isqrt(const Int& n) {
    if (n < 0)
        throw negative_operand_error();
    if (n == 0)
        return {Int(0), true};
    // Start above the root: 2^ceil(bits/2) >= sqrt(n). The iteration
    // x <- (x + n/x)/2 then decreases monotonically to floor(sqrt(n)).
    const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Int x = Int(1) << static_cast<unsigned long>((bits + 1) / 2);
    for (;;) {
        Int y = (x + n / x) >> 1;
        if (y >= x)
            break;
        x = y;
    }
    return {x, Int(x * x) == n};
}

bool is_perfect_square(const Int& n) {
    return n >= 0 && isqrt(n).exact;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x.is_negative())
        return std::nullopt;
    const IsqrtResult num_root = isqrt(x.num());
    if (!num_root.exact)
        return std::nullopt;
    const IsqrtResult den_root = isqrt(x.den());
    if (!den_root.exact)
        return std::nullopt;
    // num and den are coprime, so their roots are too; no reduction needed,
    // but the constructor keeps the invariant anyway.
    return Rational(num_root.root, den_root.root);
}

} // namespace ecq
