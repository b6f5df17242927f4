#include "ecq/curve.hpp"

namespace ecq {

CurvePoint invert(const CurvePoint& pt) {
    return CurvePoint(-pt.p_, pt.r_);
}

Rational conjugate_p(const Rational& p) {
    if (p == Rational(-1))
        throw singular_involution_error();
    return (Rational(1) - p) / (Rational(1) + p);
}

Curve::Curve(Rational q) : q_(std::move(q)) {
    if (q_.is_zero())
        throw zero_curve_parameter_error();
    degenerate_ = (q_ == Rational(1) || q_ == Rational(-1));
}

Rational Curve::r_squared_at(const Rational& p) const {
    const Rational p2 = p * p;
    const Rational q2 = q_ * q_;
    return (p2 + q2) / (Rational(1) + p2 * q2);
}

bool Curve::contains(const Rational& p, const Rational& r) const {
    const Rational p2 = p * p;
    const Rational q2 = q_ * q_;
    return p2 + q2 == r * r * (Rational(1) + p2 * q2);
}

CurvePoint Curve::point(Rational p, Rational r) const {
    if (!contains(p, r))
        throw off_curve_error();
    return CurvePoint(std::move(p), std::move(r));
}

std::optional<CurvePoint> Curve::lift(const Rational& p) const {
    std::optional<Rational> root = rational_sqrt(r_squared_at(p));
    if (!root)
        return std::nullopt;
    return CurvePoint(p, std::move(*root));
}

CurvePoint Curve::add(const CurvePoint& a, const CurvePoint& b) const {
    const Rational cross = a.p_ * b.p_ * a.r_ * b.r_;
    const Rational minus = Rational(1) - cross;
    const Rational plus = Rational(1) + cross;
    if (minus.is_zero() || plus.is_zero())
        throw exceptional_pair_error();
    Rational p = (a.p_ * b.r_ + b.p_ * a.r_) / (minus * q_);
    Rational r = (a.p_ * b.p_ + a.r_ * b.r_) / (plus * q_);
    return CurvePoint(std::move(p), std::move(r));
}

CurvePoint Curve::scalar_mul(unsigned long k, const CurvePoint& pt) const {
    CurvePoint acc = identity();
    CurvePoint base = pt;
    while (k != 0) {
        if (k & 1)
            acc = add(acc, base);
        k >>= 1;
        if (k != 0)
            base = add(base, base);
    }
    return acc;
}

ConjugateReport Curve::conjugate_status(const CurvePoint& pt) const {
    ConjugateReport report;
    report.p_bar = conjugate_p(pt.p_);
    report.s_squared = r_squared_at(report.p_bar);
    report.s = rational_sqrt(report.s_squared);
    report.conjugate_is_rational = report.s.has_value();
    return report;
}

} // namespace ecq
