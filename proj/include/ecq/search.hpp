#ifndef ECQ_SEARCH_HPP
#define ECQ_SEARCH_HPP

/**
 * @file search.hpp
 * @brief Bounded-height point enumeration and the conjugate-rationality sweep.
 *
 * Candidate p values are enumerated in a fixed total order so that runs
 * are reproducible and diffable: ascending height, then ascending
 * |numerator|, then ascending denominator, positive before negative.
 * Workers may scan candidates in parallel, but the observable output is
 * always identical to a sequential run.
 */

#include <chrono>
#include <optional>
#include <utility>
#include <vector>

#include "ecq/curve.hpp"

namespace ecq {

// The canonical candidate order described above.
bool canonical_less(const Rational& a, const Rational& b);

// Every canonical rational with height <= bound, each exactly once, in
// canonical order (0, 1, -1, 1/2, -1/2, 2, -2, ...). bound >= 1.
std::vector<Rational> enumerate_p(long bound);

// All points lift(p) for enumerated p with a rational lift, nonnegative
// r, in enumeration order; complete for the bound.
std::vector<CurvePoint> find_points(const Curve& c, long bound, unsigned jobs = 1);

struct Orbit {
    std::vector<CurvePoint> points; // [P^1, P^2, ...], possibly truncated
    // Multiple at which the law first had no image, when that happened.
    std::optional<unsigned long> exceptional_at;
};

// [P^1 .. P^n_max] via scalar multiplication; stops early, recording the
// multiple, if an exceptional pair arises.
Orbit orbit(const Curve& c, const CurvePoint& start, unsigned long n_max);

struct TheoremReport {
    Rational q;
    long height_bound = 0;
    // Nondegenerate points with their conjugate data, canonical order.
    std::vector<std::pair<CurvePoint, ConjugateReport>> points_found;
    // Lifts with p in {0, 1, -1}; excluded from the conjugate check
    // because they correspond to cuboids with a zero edge.
    std::vector<CurvePoint> degenerate_exceptions;
    // Nondegenerate rational points whose conjugate is also rational.
    // Any entry here falsifies the conjecture empirically.
    std::vector<CurvePoint> counterexamples;
    std::chrono::nanoseconds elapsed{0};
};

// Sweep every rational p of height <= bound: route degenerate lifts
// aside, compute conjugate status for the rest, and record any point
// whose conjugate is rational (after re-auditing the claim exactly).
TheoremReport verify_theorem(const Curve& c, long bound, unsigned jobs = 1);

} // namespace ecq

#endif
