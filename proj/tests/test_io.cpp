#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ecq/io.hpp"

using ecq::Curve;
using ecq::OutputFormat;
using ecq::Rational;

TEST_CASE("format names") {
    CHECK(ecq::parse_format("json") == OutputFormat::Json);
    CHECK(ecq::parse_format("csv") == OutputFormat::Csv);
    CHECK(ecq::parse_format("plain") == OutputFormat::Plain);
    CHECK_FALSE(ecq::parse_format("yaml").has_value());
}

TEST_CASE("record rendering") {
    const std::vector<ecq::Field> fields = {
        {"found", true},
        {"r", std::optional<ecq::FieldValue>(std::string("4/5"))},
        {"s", std::nullopt},
    };

    auto j = nlohmann::json::parse(ecq::render_record(fields, OutputFormat::Json));
    CHECK(j["found"] == true);
    CHECK(j["r"] == "4/5");
    CHECK_FALSE(j.contains("s")); // absent values are omitted

    CHECK(ecq::render_record(fields, OutputFormat::Csv) == "found,r,s\ntrue,4/5,\n");
    CHECK(ecq::render_record(fields, OutputFormat::Plain) == "found=true\nr=4/5\n");
}

TEST_CASE("point list rendering") {
    const Curve c(Rational(16, 21));
    const std::vector<ecq::CurvePoint> pts = {c.identity(),
                                              c.point(Rational(4, 13), Rational(4, 5))};

    auto j = nlohmann::json::parse(ecq::render_points(pts, OutputFormat::Json));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["p"] == "0");
    CHECK(j[0]["r"] == "16/21");
    CHECK(j[1]["p"] == "4/13");

    CHECK(ecq::render_points(pts, OutputFormat::Csv) == "p,r\n0,16/21\n4/13,4/5\n");
    CHECK(ecq::render_points(pts, OutputFormat::Plain) == "0 16/21\n4/13 4/5\n");
}

TEST_CASE("conjugate report json keys") {
    const Curve c(Rational(16, 21));
    const auto rep = c.conjugate_status(c.point(Rational(4, 13), Rational(4, 5)));
    const auto j = ecq::to_json(rep);
    CHECK(j["p_bar"] == "9/17");
    CHECK(j["s_squared"] == "593/801");
    CHECK(j["conjugate_rational"] == false);
    CHECK_FALSE(j.contains("s"));

    const auto trivial = ecq::to_json(c.conjugate_status(c.identity()));
    CHECK(trivial["s"] == "1");
    CHECK(trivial["conjugate_rational"] == true);
}

TEST_CASE("cuboid rendering") {
    const auto cd = ecq::build_cuboid(Rational(16, 21), Rational(4, 13), Rational(697));

    const auto j = ecq::to_json(cd);
    CHECK(j["x"]["square"] == "10816");
    CHECK(j["x"]["root"] == "104");
    CHECK(j["c"]["square"] == "474993");
    CHECK_FALSE(j["c"].contains("root"));
    CHECK(j["d"] == "697");
    CHECK(j["classification"] == "B_RATIONAL");

    const std::string csv = ecq::render_cuboid(cd, OutputFormat::Csv);
    CHECK(csv ==
          "x_square,x_root,y_square,y_root,z_square,z_root,a_square,a_root,"
          "b_square,b_root,c_square,c_root,d,classification\n"
          "10816,104,23409,153,451584,672,34225,185,462400,680,474993,,697,B_RATIONAL\n");
}

TEST_CASE("theorem report rendering") {
    const Curve c(Rational(16, 21));
    const auto report = ecq::verify_theorem(c, 13);

    const auto j = ecq::to_json(report);
    CHECK(j["q"] == "16/21");
    CHECK(j["height_bound"] == 13);
    CHECK(j["counterexamples"].is_array());
    CHECK(j["counterexamples"].empty());
    REQUIRE(j["degenerate_exceptions"].size() == 3);
    CHECK(j["degenerate_exceptions"][0]["p"] == "0");

    bool found = false;
    for (const auto& entry : j["points_found"]) {
        if (entry["p"] == "4/13") {
            found = true;
            CHECK(entry["r"] == "4/5");
            CHECK(entry["p_bar"] == "9/17");
            CHECK(entry["s_squared"] == "593/801");
            CHECK(entry["conjugate_rational"] == false);
        }
    }
    CHECK(found);

    // CSV rows are merged back into canonical p order: degenerates first
    // here, since 0 and +-1 have height 1.
    const std::string csv = ecq::render_theorem(report, OutputFormat::Csv);
    const std::string header = csv.substr(0, csv.find('\n'));
    CHECK(header == "p,r,p_bar,s_squared,conjugate_rational,degenerate");
    CHECK(csv.find("\n0,16/21,,,,true\n") != std::string::npos);
    CHECK(csv.find("\n4/13,4/5,9/17,593/801,false,false\n") != std::string::npos);

    const std::string plain = ecq::render_theorem(report, OutputFormat::Plain);
    CHECK(plain.find("q=16/21\n") != std::string::npos);
    CHECK(plain.find("counterexamples=0\n") != std::string::npos);
    CHECK(plain.find("degenerate 0 16/21\n") != std::string::npos);
}

TEST_CASE("rendering is byte-stable") {
    const Curve c(Rational(16, 21));
    const auto a = ecq::render_theorem(ecq::verify_theorem(c, 15, 1), OutputFormat::Json);
    const auto b = ecq::render_theorem(ecq::verify_theorem(c, 15, 3), OutputFormat::Json);
    CHECK(a == b);
}
