#include "ecq/search.hpp"

#include <numeric>
#include <stdexcept>
#include <thread>

namespace ecq {

bool canonical_less(const Rational& a, const Rational& b) {
    if (a == b)
        return false;
    const Int ha = height(a);
    const Int hb = height(b);
    if (ha != hb)
        return ha < hb;
    const Int na = ::abs(a.num());
    const Int nb = ::abs(b.num());
    if (na != nb)
        return na < nb;
    if (a.den() != b.den())
        return a.den() < b.den();
    return a.num() > b.num(); // equal magnitude: positive first
}

std::vector<Rational> enumerate_p(long bound) {
    if (bound < 1)
        throw std::invalid_argument("height bound must be >= 1");
    std::vector<Rational> out;
    // Density of coprime pairs is 6/pi^2; double for signs, plus slack.
    out.reserve(static_cast<size_t>(1.3 * static_cast<double>(bound) * static_cast<double>(bound)) + 8);
    out.emplace_back(0);
    out.emplace_back(1);
    out.emplace_back(-1);
    for (long h = 2; h <= bound; ++h) {
        // |num| < h forces den = h; then |num| = h with den < h. Emitting
        // the two blocks in this sequence is exactly canonical order.
        for (long n = 1; n < h; ++n) {
            if (std::gcd(n, h) == 1) {
                out.emplace_back(n, h);
                out.emplace_back(-n, h);
            }
        }
        for (long d = 1; d < h; ++d) {
            if (std::gcd(h, d) == 1) {
                out.emplace_back(h, d);
                out.emplace_back(-h, d);
            }
        }
    }
    return out;
}

namespace {

// Lift each candidate into its slot; slot order alone fixes the output,
// so any partition of the index range gives identical results.
void lift_range(const Curve& c, const std::vector<Rational>& candidates,
                std::vector<std::optional<CurvePoint>>& slots, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i)
        slots[i] = c.lift(candidates[i]);
}

} // namespace

std::vector<CurvePoint> find_points(const Curve& c, long bound, unsigned jobs) {
    const std::vector<Rational> candidates = enumerate_p(bound);
    std::vector<std::optional<CurvePoint>> slots(candidates.size());

    if (jobs <= 1 || candidates.size() < 2 * jobs) {
        lift_range(c, candidates, slots, 0, candidates.size());
    } else {
        const size_t chunk = (candidates.size() + jobs - 1) / jobs;
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) {
            const size_t begin = j * chunk;
            const size_t end = std::min(candidates.size(), begin + chunk);
            if (begin >= end)
                break;
            workers.emplace_back(lift_range, std::cref(c), std::cref(candidates),
                                 std::ref(slots), begin, end);
        }
        for (std::thread& w : workers)
            w.join();
    }

    std::vector<CurvePoint> points;
    for (std::optional<CurvePoint>& slot : slots)
        if (slot)
            points.push_back(std::move(*slot));
    return points;
}

Orbit orbit(const Curve& c, const CurvePoint& start, unsigned long n_max) {
    Orbit out;
    out.points.reserve(n_max);
    for (unsigned long k = 1; k <= n_max; ++k) {
        try {
            out.points.push_back(c.scalar_mul(k, start));
        } catch (const exceptional_pair_error&) {
            out.exceptional_at = k;
            break;
        }
    }
    return out;
}

namespace {

bool degenerate_p(const Rational& p) {
    return p.is_zero() || p == Rational(1) || p == Rational(-1);
}

// A counterexample claim is checked from scratch before it is reported:
// both points must be exact rational members of the curve.
bool audit_counterexample(const Curve& c, const CurvePoint& pt, const ConjugateReport& report) {
    if (!c.contains(pt.p(), pt.r()))
        return false;
    if (!report.s)
        return false;
    if (*report.s * *report.s != report.s_squared)
        return false;
    const ConjugateReport again = c.conjugate_status(pt);
    return again.conjugate_is_rational && again.s && c.contains(report.p_bar, *again.s);
}

} // namespace

TheoremReport verify_theorem(const Curve& c, long bound, unsigned jobs) {
    const auto start_time = std::chrono::steady_clock::now();

    TheoremReport report;
    report.q = c.q();
    report.height_bound = bound;

    for (CurvePoint& pt : find_points(c, bound, jobs)) {
        if (degenerate_p(pt.p())) {
            report.degenerate_exceptions.push_back(std::move(pt));
            continue;
        }
        ConjugateReport conj = c.conjugate_status(pt);
        if (conj.conjugate_is_rational) {
            if (!audit_counterexample(c, pt, conj))
                throw std::logic_error("counterexample failed its self-audit");
            report.counterexamples.push_back(pt);
        }
        report.points_found.emplace_back(std::move(pt), std::move(conj));
    }

    report.elapsed = std::chrono::steady_clock::now() - start_time;
    return report;
}

} // namespace ecq
