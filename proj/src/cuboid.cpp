#include "ecq/cuboid.hpp"

#include "ecq/angles.hpp"

namespace ecq {

QuadValue QuadValue::from_square(Rational sq) {
    if (sq.is_negative())
        throw domain_error("square value must be nonnegative");
    QuadValue v;
    v.root = rational_sqrt(sq);
    v.square = std::move(sq);
    return v;
}

std::string_view to_string(CuboidClass c) {
    switch (c) {
    case CuboidClass::Perfect:
        return "PERFECT";
    case CuboidClass::BRational:
        return "B_RATIONAL";
    case CuboidClass::CRational:
        return "C_RATIONAL";
    case CuboidClass::Neither:
        return "NEITHER";
    }
    return "NEITHER";
}

namespace {

bool degenerate_generator(const Rational& m) {
    return m.is_zero() || m == Rational(1) || m == Rational(-1);
}

} // namespace

CuboidData build_cuboid(const Rational& q_gen, const Rational& p_gen, const Rational& d) {
    if (degenerate_generator(q_gen) || degenerate_generator(p_gen))
        throw degenerate_generator_error();
    if (d <= Rational(0))
        throw nonpositive_scale_error();

    const UnitPair theta = cos_sin_from_generator(Generator(q_gen));
    const UnitPair varphi = cos_sin_from_generator(Generator(p_gen));

    // The two composite cosines; both rational whenever the inputs are.
    const Rational cos_phi = theta.cos() * varphi.cos();
    const Rational cos_psi = theta.cos() * varphi.sin();

    const Rational one(1);
    const Rational d2 = d * d;

    CuboidData cd;
    cd.x = QuadValue::from_square(d2 * cos_psi * cos_psi);
    cd.y = QuadValue::from_square(d2 * cos_phi * cos_phi);
    cd.z = QuadValue::from_square(d2 * theta.sin() * theta.sin());
    cd.a = QuadValue::from_square(d2 * theta.cos() * theta.cos());
    cd.b = QuadValue::from_square(d2 * (one - cos_phi * cos_phi));
    cd.c = QuadValue::from_square(d2 * (one - cos_psi * cos_psi));
    cd.d = d;
    cd.q_gen = q_gen;
    cd.p_gen = p_gen;
    cd.scale = d;
    return cd;
}

bool verify_cuboid(const CuboidData& cd) {
    const Rational d2 = cd.d * cd.d;
    return cd.x.square + cd.y.square == cd.a.square &&
           cd.x.square + cd.z.square == cd.b.square &&
           cd.y.square + cd.z.square == cd.c.square &&
           cd.x.square + cd.y.square + cd.z.square == d2;
}

CuboidClass classify_cuboid(const CuboidData& cd) {
    const bool all_rational = cd.x.rational() && cd.y.rational() && cd.z.rational() &&
                              cd.a.rational() && cd.b.rational() && cd.c.rational();
    if (all_rational)
        return CuboidClass::Perfect;
    if (cd.b.rational() && !cd.c.rational())
        return CuboidClass::BRational;
    if (cd.c.rational() && !cd.b.rational())
        return CuboidClass::CRational;
    return CuboidClass::Neither;
}

} // namespace ecq
