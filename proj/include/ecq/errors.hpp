#ifndef ECQ_ERRORS_HPP
#define ECQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ecq {

// Base for every mathematical domain violation. The CLI maps these to exit 2.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct zero_denominator_error : domain_error {
    zero_denominator_error() : domain_error("zero denominator") {}
};

struct division_by_zero_error : domain_error {
    division_by_zero_error() : domain_error("division by zero") {}
};

struct negative_operand_error : domain_error {
    negative_operand_error() : domain_error("integer square root of a negative number") {}
};

// cos = -1: the angle pi has no finite half-angle generator.
struct singular_angle_error : domain_error {
    singular_angle_error() : domain_error("angle has no finite generator (cos = -1)") {}
};

// m = -1 is the fixed singularity of m -> (1-m)/(1+m).
struct singular_involution_error : domain_error {
    singular_involution_error() : domain_error("involution undefined at generator -1") {}
};

// m = 0 cannot be reflected through m -> 1/m.
struct zero_generator_error : domain_error {
    zero_generator_error() : domain_error("reflection undefined at generator 0") {}
};

struct off_circle_error : domain_error {
    off_circle_error() : domain_error("cos^2 + sin^2 != 1") {}
};

struct zero_curve_parameter_error : domain_error {
    zero_curve_parameter_error() : domain_error("curve parameter q must be nonzero") {}
};

struct off_curve_error : domain_error {
    off_curve_error() : domain_error("point does not satisfy the curve equation") {}
};

// The affine group law has no image when 1 -+ p1*p2*r1*r2 vanishes.
struct exceptional_pair_error : domain_error {
    exceptional_pair_error() : domain_error("group law undefined for this pair of points") {}
};

// Generators in {0, 1, -1} produce a cuboid with a zero edge.
struct degenerate_generator_error : domain_error {
    degenerate_generator_error() : domain_error("degenerate generator (0, 1 or -1)") {}
};

struct nonpositive_scale_error : domain_error {
    nonpositive_scale_error() : domain_error("scale must be positive") {}
};

// Malformed input text. The CLI maps these to exit 1.
struct parse_error : std::invalid_argument {
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace ecq

#endif
