#ifndef ECQ_ANGLES_HPP
#define ECQ_ANGLES_HPP

// Half-angle generator calculus: the bijection between rational generators
// m = tan(alpha/2) and Heron angles (angles whose sine and cosine are both
// rational), plus the two maps the curve construction needs: the involution
// alpha -> pi/2 - alpha and the reflection alpha -> pi - alpha.

#include <utility>

#include "ecq/rational.hpp"

namespace ecq {

// m = tan(alpha/2). Any rational value is allowed; m = -1 is the one point
// where the involution has no image.
struct Generator {
    Rational m;

    explicit Generator(Rational value) : m(std::move(value)) {}
    bool involution_singular() const { return m == Rational(-1); }
    friend bool operator==(const Generator&, const Generator&) = default;
};

// Exact (cos, sin) of a Heron angle. The constructor enforces the unit
// circle identity, so a UnitPair is always genuine.
class UnitPair {
public:
    UnitPair(Rational cos_value, Rational sin_value)
        : cos_(std::move(cos_value)), sin_(std::move(sin_value)) {
        if (cos_ * cos_ + sin_ * sin_ != Rational(1))
            throw off_circle_error();
    }

    const Rational& cos() const { return cos_; }
    const Rational& sin() const { return sin_; }

    UnitPair swapped() const { return UnitPair(sin_, cos_); }

    friend bool operator==(const UnitPair&, const UnitPair&) = default;

private:
    Rational cos_, sin_;
};

// ((1 - m^2)/(1 + m^2), 2m/(1 + m^2)); total, since 1 + m^2 > 0.
UnitPair cos_sin_from_generator(const Generator& g);

// sin/(1 + cos); throws singular_angle_error at cos = -1.
Generator generator_from_cos_sin(const UnitPair& u);

// m -> (1 - m)/(1 + m); self-inverse away from m = -1, and swaps the
// (cos, sin) of the associated angle.
Generator involute(const Generator& g);

// m -> 1/m; maps (cos, sin) to (-cos, sin). Throws zero_generator_error
// at m = 0.
Generator reflect(const Generator& g);

} // namespace ecq

#endif
