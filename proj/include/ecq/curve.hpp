#ifndef ECQ_CURVE_HPP
#define ECQ_CURVE_HPP

/**
 * @file curve.hpp
 * @brief The curve p^2 + q^2 = r^2 (1 + p^2 q^2) and its Abelian group.
 *
 * For a fixed rational q != 0 this is an Edwards-form elliptic curve in
 * the coordinates (p, r). The group law, inverse and identity are all
 * affine and exact; pairs whose law denominator vanishes are rejected
 * rather than completed projectively.
 */

#include <optional>
#include <utility>

#include "ecq/rational.hpp"

namespace ecq {

class Curve;

// A point certified to satisfy the curve equation. Only Curve (and the
// coordinate-wise inverse) can mint one, so the certificate is structural.
class CurvePoint {
public:
    const Rational& p() const { return p_; }
    const Rational& r() const { return r_; }

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
    friend CurvePoint invert(const CurvePoint& pt);

private:
    friend class Curve;
    CurvePoint(Rational p, Rational r) : p_(std::move(p)), r_(std::move(r)) {}

    Rational p_, r_;
};

// (p, r) -> (-p, r); the group inverse on every curve through the point.
CurvePoint invert(const CurvePoint& pt);

// p -> (1 - p)/(1 + p), the involution on the p-coordinate.
// Throws singular_involution_error at p = -1.
Rational conjugate_p(const Rational& p);

// Everything known about the conjugate of a point: its p-coordinate,
// the exact square of its r-coordinate, and whether that square admits
// a rational root (s is the nonnegative root when it does).
struct ConjugateReport {
    Rational p_bar;
    Rational s_squared;
    std::optional<Rational> s;
    bool conjugate_is_rational = false;

    friend bool operator==(const ConjugateReport&, const ConjugateReport&) = default;
};

class Curve {
public:
    // Throws zero_curve_parameter_error when q = 0 (the group law divides
    // by q). |q| = 1 is allowed but flagged: r^2 = 1 identically, so the
    // curve carries no cuboid geometry.
    explicit Curve(Rational q);

    const Rational& q() const { return q_; }
    bool degenerate_for_cuboids() const { return degenerate_; }

    // Exact membership test; accepts both signs of r.
    bool contains(const Rational& p, const Rational& r) const;

    // Validating constructor; throws off_curve_error.
    CurvePoint point(Rational p, Rational r) const;

    // r^2 determined by p; a point with the nonnegative root when that
    // square is a rational square, nullopt otherwise.
    std::optional<CurvePoint> lift(const Rational& p) const;

    CurvePoint identity() const { return CurvePoint(Rational(0), q_); }

    // The affine group law. Throws exceptional_pair_error when
    // 1 -+ p1 p2 r1 r2 vanishes.
    CurvePoint add(const CurvePoint& a, const CurvePoint& b) const;

    // k-fold composition by double-and-add; k = 0 gives the identity.
    CurvePoint scalar_mul(unsigned long k, const CurvePoint& pt) const;

    // Conjugate data for a point; throws singular_involution_error at p = -1.
    ConjugateReport conjugate_status(const CurvePoint& pt) const;

private:
    // The square the curve equation forces at a given p.
    Rational r_squared_at(const Rational& p) const;

    Rational q_;
    bool degenerate_;
};

} // namespace ecq

#endif
