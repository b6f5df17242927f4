// Command-line front end. Every subcommand reads exact rational strings,
// writes one machine-readable document to stdout and diagnostics to
// stderr. Exit codes: 0 success, 1 usage or parse error, 2 domain error,
// 3 theorem counterexample found.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "ecq/cuboid.hpp"
#include "ecq/curve.hpp"
#include "ecq/io.hpp"
#include "ecq/search.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ecq::Rational parse_option(const std::string& text, const char* name) {
    try {
        return ecq::Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("option --") + name + ": " + e.what());
    }
}

std::vector<ecq::Field> point_fields(const ecq::CurvePoint& pt) {
    return {{"p", pt.p().str()}, {"r", pt.r().str()}};
}

std::vector<ecq::Field> conjugate_fields(const ecq::ConjugateReport& rep) {
    return {
        {"p_bar", rep.p_bar.str()},
        {"s_squared", rep.s_squared.str()},
        {"s", rep.s ? std::optional<ecq::FieldValue>(rep.s->str()) : std::nullopt},
        {"conjugate_rational", rep.conjugate_is_rational},
    };
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational points on the curve p^2 + q^2 = r^2 (1 + p^2 q^2)"};
    app.require_subcommand(1);

    std::string q_text, p_text, r_text, p1_text, r1_text, p2_text, r2_text, d_text;
    std::string format = "json";
    unsigned long count = 0;
    long bound = 1;
    unsigned jobs = 1;

    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format: json, csv or plain")
            ->check(CLI::IsMember({"json", "csv", "plain"}));
    };
    auto require_q = [&q_text](CLI::App* sub) {
        sub->add_option("--q", q_text, "curve parameter q")->required();
    };

    CLI::App* cmd_check = app.add_subcommand("check", "test whether (p, r) lies on the curve");
    require_q(cmd_check);
    cmd_check->add_option("--p", p_text)->required();
    cmd_check->add_option("--r", r_text)->required();
    add_format(cmd_check);

    CLI::App* cmd_lift = app.add_subcommand("lift", "solve for the nonnegative r over a given p");
    require_q(cmd_lift);
    cmd_lift->add_option("--p", p_text)->required();
    add_format(cmd_lift);

    CLI::App* cmd_add = app.add_subcommand("add", "compose two points under the group law");
    require_q(cmd_add);
    cmd_add->add_option("--p1", p1_text)->required();
    cmd_add->add_option("--r1", r1_text)->required();
    cmd_add->add_option("--p2", p2_text)->required();
    cmd_add->add_option("--r2", r2_text)->required();
    add_format(cmd_add);

    CLI::App* cmd_mul = app.add_subcommand("mul", "compose a point with itself n times");
    require_q(cmd_mul);
    cmd_mul->add_option("--p", p_text)->required();
    cmd_mul->add_option("--r", r_text)->required();
    cmd_mul->add_option("--n", count, "multiple, n >= 0")->required()
        ->check(CLI::NonNegativeNumber);
    add_format(cmd_mul);

    CLI::App* cmd_conj = app.add_subcommand("conjugate", "conjugate point data for (p, r)");
    require_q(cmd_conj);
    cmd_conj->add_option("--p", p_text)->required();
    cmd_conj->add_option("--r", r_text)->required();
    add_format(cmd_conj);

    CLI::App* cmd_cuboid =
        app.add_subcommand("cuboid", "build the cuboid for generators q, p and diagonal d");
    require_q(cmd_cuboid);
    cmd_cuboid->add_option("--p", p_text)->required();
    cmd_cuboid->add_option("--d", d_text)->required();
    add_format(cmd_cuboid);

    CLI::App* cmd_search = app.add_subcommand("search", "list rational points up to a height bound");
    require_q(cmd_search);
    cmd_search->add_option("--height", bound, "height bound, >= 1")->required()
        ->check(CLI::PositiveNumber);
    cmd_search->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    add_format(cmd_search);

    CLI::App* cmd_verify = app.add_subcommand(
        "verify-theorem", "sweep all p up to a height bound for rational conjugate pairs");
    require_q(cmd_verify);
    cmd_verify->add_option("--height", bound, "height bound, >= 1")->required()
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    add_format(cmd_verify);

    CLI::App* cmd_orbit = app.add_subcommand("orbit", "multiples P, 2P, ..., nP of a point");
    require_q(cmd_orbit);
    cmd_orbit->add_option("--p", p_text)->required();
    cmd_orbit->add_option("--r", r_text)->required();
    cmd_orbit->add_option("--n", count, "largest multiple, n >= 1")->required()
        ->check(CLI::PositiveNumber);
    add_format(cmd_orbit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        const ecq::OutputFormat fmt = *ecq::parse_format(format);

        if (app.got_subcommand(cmd_check)) {
            ecq::Curve curve(parse_option(q_text, "q"));
            const bool on_curve =
                curve.contains(parse_option(p_text, "p"), parse_option(r_text, "r"));
            std::cout << ecq::render_record({{"on_curve", on_curve}}, fmt);
        } else if (app.got_subcommand(cmd_lift)) {
            ecq::Curve curve(parse_option(q_text, "q"));
            const auto lifted = curve.lift(parse_option(p_text, "p"));
            std::cout << ecq::render_record(
                {{"found", lifted.has_value()},
                 {"r", lifted ? std::optional<ecq::FieldValue>(lifted->r().str()) : std::nullopt}},
                fmt);
        } else if (app.got_subcommand(cmd_add)) {
            ecq::Curve curve(parse_option(q_text, "q"));
            const ecq::CurvePoint sum = curve.add(
                curve.point(parse_option(p1_text, "p1"), parse_option(r1_text, "r1")),
                curve.point(parse_option(p2_text, "p2"), parse_option(r2_text, "r2")));
            std::cout << ecq::render_record(point_fields(sum), fmt);
        } else if (app.got_subcommand(cmd_mul)) {
            ecq::Curve curve(parse_option(q_text, "q"));
            const ecq::CurvePoint result = curve.scalar_mul(
                count, curve.point(parse_option(p_text, "p"), parse_option(r_text, "r")));
            std::cout << ecq::render_record(point_fields(result), fmt);
        } else if (app.got_subcommand(cmd_conj)) {
            ecq::Curve curve(parse_option(q_text, "q"));
            const ecq::ConjugateReport rep = curve.conjugate_status(
                curve.point(parse_option(p_text, "p"), parse_option(r_text, "r")));
            std::cout << ecq::render_record(conjugate_fields(rep), fmt);
        } else if (app.got_subcommand(cmd_cuboid)) {
            const ecq::CuboidData cd =
                ecq::build_cuboid(parse_option(q_text, "q"), parse_option(p_text, "p"),
                                  parse_option(d_text, "d"));
            if (ecq::classify_cuboid(cd) == ecq::CuboidClass::Perfect)
                std::cerr << "ALARM: perfect cuboid constructed; all seven quantities are "
                             "rational. Re-check the inputs and report this result.\n";
            std::cout << ecq::render_cuboid(cd, fmt);
        } else if (app.got_subcommand(cmd_search)) {
            ecq::Curve curve(parse_option(q_text, "q"));
            std::cout << ecq::render_points(ecq::find_points(curve, bound, jobs), fmt);
        } else if (app.got_subcommand(cmd_verify)) {
            ecq::Curve curve(parse_option(q_text, "q"));
            if (curve.degenerate_for_cuboids())
                std::cerr << "warning: |q| = 1 forces r^2 = 1 identically; conjugate "
                             "pairs on this curve carry no cuboid meaning\n";
            const ecq::TheoremReport report = ecq::verify_theorem(curve, bound, jobs);
            std::cout << ecq::render_theorem(report, fmt);
            const auto ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed);
            std::cerr << "elapsed_ms=" << ms.count() << "\n";
            if (!report.counterexamples.empty()) {
                std::cerr << "ALARM: conjugate pair of rational points found; this "
                             "contradicts the conjugate-point theorem.\n";
                return 3;
            }
        } else if (app.got_subcommand(cmd_orbit)) {
            ecq::Curve curve(parse_option(q_text, "q"));
            const ecq::Orbit result = ecq::orbit(
                curve, curve.point(parse_option(p_text, "p"), parse_option(r_text, "r")), count);
            if (result.exceptional_at)
                std::cerr << "note: orbit stopped at multiple " << *result.exceptional_at
                          << ": group law has no image\n";
            std::cout << ecq::render_points(result.points, fmt);
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ecq::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ecq::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
