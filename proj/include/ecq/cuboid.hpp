#ifndef ECQ_CUBOID_HPP
#define ECQ_CUBOID_HPP

// Cuboids parametrized by two Heron angles and a rational space diagonal.
// Edges x, y, z, face diagonals a, b, c and space diagonal d satisfy
//
//   x^2 + y^2 = a^2,  x^2 + z^2 = b^2,  y^2 + z^2 = c^2,
//   x^2 + y^2 + z^2 = d^2.
//
// Rationality of the diagonals is the whole question, so every quantity
// is stored as its exact square plus an optional exact root.

#include <optional>
#include <string_view>

#include "ecq/rational.hpp"

namespace ecq {

// A value kept as its exact square; root present iff the square is the
// square of a rational, and then root >= 0 with root^2 = square.
struct QuadValue {
    Rational square;
    std::optional<Rational> root;

    static QuadValue from_square(Rational sq);
    bool rational() const { return root.has_value(); }

    friend bool operator==(const QuadValue&, const QuadValue&) = default;
};

enum class CuboidClass {
    Perfect,   // all seven quantities rational; would contradict the
               // nonexistence of a perfect cuboid
    BRational, // face diagonal b rational, c irrational
    CRational, // face diagonal c rational, b irrational
    Neither,
};

std::string_view to_string(CuboidClass c);

struct CuboidData {
    QuadValue x, y, z; // edges
    QuadValue a, b, c; // face diagonals of (x,y), (x,z), (y,z)
    Rational d;        // space diagonal, rational by construction

    // Source parameters of build_cuboid: angle generators and scale.
    Rational q_gen, p_gen, scale;
};

// Build the cuboid with generators q_gen (angle theta) and p_gen (angle
// varphi) and space diagonal d:
//
//   x = d cos(theta) sin(varphi),  y = d cos(theta) cos(varphi),
//   z = d sin(theta),              a = d cos(theta).
//
// x, y, z, a, d are rational by construction; only b and c may fail to be.
// Throws degenerate_generator_error for generators in {0, 1, -1} (a zero
// edge) and nonpositive_scale_error for d <= 0.
CuboidData build_cuboid(const Rational& q_gen, const Rational& p_gen, const Rational& d);

// True iff all four defining equations hold exactly on the squares.
bool verify_cuboid(const CuboidData& cd);

CuboidClass classify_cuboid(const CuboidData& cd);

} // namespace ecq

#endif
