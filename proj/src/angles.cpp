#include "ecq/angles.hpp"

namespace ecq {

UnitPair cos_sin_from_generator(const Generator& g) {
    const Rational m2 = g.m * g.m;
    const Rational one_plus = Rational(1) + m2;
    return UnitPair((Rational(1) - m2) / one_plus, (Rational(2) * g.m) / one_plus);
}

Generator generator_from_cos_sin(const UnitPair& u) {
    if (u.cos() == Rational(-1))
        throw singular_angle_error();
    return Generator(u.sin() / (Rational(1) + u.cos()));
}

Generator involute(const Generator& g) {
    if (g.involution_singular())
        throw singular_involution_error();
    return Generator((Rational(1) - g.m) / (Rational(1) + g.m));
}

Generator reflect(const Generator& g) {
    if (g.m.is_zero())
        throw zero_generator_error();
    return Generator(Rational(1) / g.m);
}

} // namespace ecq
