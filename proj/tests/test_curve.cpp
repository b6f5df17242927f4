#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ecq/curve.hpp"

using ecq::Curve;
using ecq::CurvePoint;
using ecq::Rational;

namespace {

// r^2 - p^2 = q^2 (1 - r^2 p^2), the difference form of the curve equation.
bool difference_identity(const Curve& c, const CurvePoint& pt) {
    const Rational p2 = pt.p() * pt.p();
    const Rational r2 = pt.r() * pt.r();
    return r2 - p2 == c.q() * c.q() * (Rational(1) - r2 * p2);
}

// A spread of points on E(16/21): the known generator's orbit, inverses,
// the identity and the unit points.
std::vector<CurvePoint> sample_points(const Curve& c) {
    std::vector<CurvePoint> pts;
    pts.push_back(c.identity());
    pts.push_back(c.point(Rational(1), Rational(1)));
    pts.push_back(c.point(Rational(-1), Rational(1)));
    const CurvePoint base = c.point(Rational(4, 13), Rational(4, 5));
    CurvePoint acc = base;
    for (int k = 1; k <= 6; ++k) {
        pts.push_back(acc);
        pts.push_back(invert(acc));
        acc = c.add(acc, base);
    }
    return pts;
}

} // namespace

TEST_CASE("curve construction") {
    const Curve c(Rational(16, 21));
    CHECK(c.q() == Rational(16, 21));
    CHECK_FALSE(c.degenerate_for_cuboids());

    CHECK_THROWS_AS(Curve(Rational(0)), ecq::zero_curve_parameter_error);

    // |q| = 1 forces r^2 = 1 for every p; usable group, no cuboid meaning.
    const Curve unit(Rational(1));
    CHECK(unit.degenerate_for_cuboids());
    CHECK(unit.contains(Rational(7, 3), Rational(1)));
    CHECK(Curve(Rational(-1)).degenerate_for_cuboids());
}

TEST_CASE("membership") {
    const Curve c(Rational(16, 21));
    CHECK(c.contains(Rational(4, 13), Rational(4, 5)));
    CHECK(c.contains(Rational(4, 13), Rational(-4, 5))); // sign symmetry in r
    CHECK_FALSE(c.contains(Rational(4, 13), Rational(3, 5)));

    for (long n : {2L, 3L, -5L}) {
        const Curve cq(Rational(n, 7));
        CHECK(cq.contains(Rational(0), cq.q()));
        CHECK(cq.contains(Rational(1), Rational(1)));
    }
}

TEST_CASE("validated point construction") {
    const Curve c(Rational(16, 21));
    CHECK_NOTHROW(c.point(Rational(4, 13), Rational(4, 5)));
    CHECK_THROWS_AS(c.point(Rational(4, 13), Rational(1, 2)), ecq::off_curve_error);
}

TEST_CASE("lift") {
    const Curve c(Rational(16, 21));

    auto pt = c.lift(Rational(4, 13));
    REQUIRE(pt.has_value());
    CHECK(pt->r() == Rational(4, 5));

    CHECK_FALSE(c.lift(Rational(9, 17)).has_value());

    pt = c.lift(Rational(0));
    REQUIRE(pt.has_value());
    CHECK(pt->r() == Rational(16, 21));

    // The lifted root is nonnegative even when q is negative.
    const Curve neg(Rational(-16, 21));
    pt = neg.lift(Rational(0));
    REQUIRE(pt.has_value());
    CHECK(pt->r() == Rational(16, 21));
    CHECK(neg.contains(Rational(0), Rational(-16, 21)));
}

TEST_CASE("group law") {
    const Curve c(Rational(16, 21));
    const CurvePoint P = c.point(Rational(4, 13), Rational(4, 5));

    CHECK(c.add(P, c.identity()) == P);
    CHECK(c.add(c.identity(), P) == P);
    CHECK(c.add(P, invert(P)) == c.identity());

    const CurvePoint doubled = c.add(P, P);
    CHECK(doubled.p() == Rational(130, 189));
    CHECK(doubled.r() == Rational(4074, 4481));
    CHECK(c.contains(doubled.p(), doubled.r()));

    CHECK(c.add(c.identity(), c.identity()) == c.identity());
}

TEST_CASE("exceptional pairs are rejected") {
    const Curve c(Rational(16, 21));
    const CurvePoint u = c.point(Rational(1), Rational(1));
    CHECK_THROWS_AS(c.add(u, u), ecq::exceptional_pair_error);
    CHECK_THROWS_AS(c.add(u, c.point(Rational(-1), Rational(1))),
                    ecq::exceptional_pair_error);
}

TEST_CASE("inverse") {
    const Curve c(Rational(16, 21));
    const CurvePoint P = c.point(Rational(4, 13), Rational(4, 5));
    CHECK(invert(P) == c.point(Rational(-4, 13), Rational(4, 5)));
    CHECK(invert(c.identity()) == c.identity());
    for (const CurvePoint& pt : sample_points(c))
        CHECK(invert(invert(pt)) == pt);
}

TEST_CASE("identity") {
    const Curve c(Rational(16, 21));
    CHECK(c.identity().p() == Rational(0));
    CHECK(c.identity().r() == Rational(16, 21));
    for (long n : {1L, -4L, 9L}) {
        const Curve cq(Rational(n, 11));
        CHECK(cq.contains(Rational(0), cq.q()));
    }
}

TEST_CASE("scalar multiplication") {
    const Curve c(Rational(16, 21));
    const CurvePoint P = c.point(Rational(4, 13), Rational(4, 5));

    CHECK(c.scalar_mul(0, P) == c.identity());
    CHECK(c.scalar_mul(1, P) == P);
    CHECK(c.scalar_mul(2, P) == c.point(Rational(130, 189), Rational(4074, 4481)));

    // k-fold double-and-add agrees with iterated addition.
    CurvePoint acc = c.identity();
    for (unsigned long k = 1; k <= 8; ++k) {
        acc = c.add(acc, P);
        CHECK(c.scalar_mul(k, P) == acc);
    }
}

TEST_CASE("conjugate p-coordinate") {
    CHECK(ecq::conjugate_p(Rational(4, 13)) == Rational(9, 17));
    CHECK(ecq::conjugate_p(Rational(0)) == Rational(1));
    CHECK_THROWS_AS(ecq::conjugate_p(Rational(-1)), ecq::singular_involution_error);
    for (long n = -6; n <= 6; ++n) {
        const Rational p(n, 7);
        CHECK(ecq::conjugate_p(ecq::conjugate_p(p)) == p);
    }
}

TEST_CASE("conjugate status") {
    const Curve c(Rational(16, 21));

    const auto report = c.conjugate_status(c.point(Rational(4, 13), Rational(4, 5)));
    CHECK(report.p_bar == Rational(9, 17));
    CHECK(report.s_squared == Rational(593, 801));
    CHECK(report.s_squared == Rational(474993, 641601)); // same value before reduction
    CHECK_FALSE(report.conjugate_is_rational);
    CHECK_FALSE(report.s.has_value());

    // The identity's conjugate is the degenerate rational pair (1, 1).
    const auto trivial = c.conjugate_status(c.identity());
    CHECK(trivial.p_bar == Rational(1));
    CHECK(trivial.s_squared == Rational(1));
    CHECK(trivial.conjugate_is_rational);
    CHECK(*trivial.s == Rational(1));

    CHECK_THROWS_AS(c.conjugate_status(c.point(Rational(-1), Rational(1))),
                    ecq::singular_involution_error);
}

TEST_CASE("conjugate rationality is invariant under p-negation") {
    const Curve c(Rational(16, 21));
    for (const CurvePoint& pt : sample_points(c)) {
        if (pt.p() == Rational(1) || pt.p() == Rational(-1))
            continue;
        const auto a = c.conjugate_status(pt);
        const auto b = c.conjugate_status(invert(pt));
        CHECK(a.conjugate_is_rational == b.conjugate_is_rational);
        // s^2 of one direction is the reciprocal of the other.
        CHECK(a.s_squared * b.s_squared == Rational(1));
    }
}

TEST_CASE("group axioms on sampled points") {
    const Curve c(Rational(16, 21));
    const auto pts = sample_points(c);

    for (const CurvePoint& a : pts) {
        CHECK(c.add(a, c.identity()) == a);
        try {
            const CurvePoint sum = c.add(a, invert(a));
            CHECK(sum == c.identity());
        } catch (const ecq::exceptional_pair_error&) {
            // Only the unit points lack an affine sum with their inverse:
            // p * (-p) * r * r = -1 exactly when |p| = |r| = 1.
            CHECK(ecq::abs(a.p()) == Rational(1));
        }
        for (const CurvePoint& b : pts) {
            CurvePoint ab = c.identity();
            try {
                ab = c.add(a, b);
            } catch (const ecq::exceptional_pair_error&) {
                continue;
            }
            CHECK(c.contains(ab.p(), ab.r())); // closure
            CHECK(ab == c.add(b, a));          // commutativity
            CHECK(difference_identity(c, ab));
        }
    }
}

TEST_CASE("associativity on sampled triples") {
    const Curve c(Rational(16, 21));
    const auto pts = sample_points(c);
    size_t checked = 0;
    for (size_t i = 0; i < pts.size(); i += 2)
        for (size_t j = 1; j < pts.size(); j += 2)
            for (size_t k = 0; k < pts.size(); k += 3) {
                try {
                    const CurvePoint left = c.add(c.add(pts[i], pts[j]), pts[k]);
                    const CurvePoint right = c.add(pts[i], c.add(pts[j], pts[k]));
                    CHECK(left == right);
                    ++checked;
                } catch (const ecq::exceptional_pair_error&) {
                }
            }
    CHECK(checked > 50);
}

TEST_CASE("difference identity on every produced point") {
    const Curve c(Rational(16, 21));
    for (const CurvePoint& pt : sample_points(c))
        CHECK(difference_identity(c, pt));

    const Curve c2(Rational(3, 5));
    const CurvePoint Q = c2.point(Rational(4, 7), Rational(29, 37));
    CHECK(difference_identity(c2, Q));
    CHECK(difference_identity(c2, c2.add(Q, Q)));
    CHECK(difference_identity(c2, c2.scalar_mul(5, Q)));
}
