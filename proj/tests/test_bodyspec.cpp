#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "hullvol/bodyspec.hpp"
#include "hullvol/errors.hpp"

using namespace hullvol;

namespace {
Rational r(long p, long q = 1) { return Rational(p, q); }
}

TEST_CASE("rationalize finds small-denominator approximations") {
    Rational pi6 = rationalize(M_PI, 1e-6);
    CHECK(pi6 == r(355, 113));
    CHECK(std::fabs(to_double(rationalize(std::sqrt(2.0), 1e-9)) - std::sqrt(2.0)) <= 1e-9);
    CHECK(rationalize(0.5, 1e-12) == r(1, 2));
    CHECK(rationalize(-1.25, 1e-12) == r(-5, 4));
    CHECK_THROWS_AS(rationalize(1.0, 0.0), InvalidTolerance);
}

TEST_CASE("regular_gon") {
    ConvexPolygon p = regular_gon(5);
    REQUIRE(p.size() == 5);
    for (const auto& v : p.vertices()) {
        double rad = std::hypot(to_double(v.x), to_double(v.y));
        CHECK(std::fabs(rad - 1.0) < 3e-9);
    }
    double expect_area = 2.5 * std::sin(2 * M_PI / 5);
    CHECK(std::fabs(to_double(area2(p)) - expect_area) < 1e-7);
    CHECK_THROWS_AS(regular_gon(2), ParseError);
}

TEST_CASE("parse polygon documents") {
    BodySpec s = parse_body_json(
        R"({"kind":"polygon","vertices":[["0","0"],["1/2","0"],["0.25","3/4"]]})");
    CHECK(s.kind == "polygon");
    CHECK(s.dim == 2);
    REQUIRE(s.polygon.has_value());
    CHECK(s.polygon->size() == 3);
    CHECK((*s.polygon)[2] == Vec2(r(1, 4), r(3, 4)));
    CHECK(area2(*s.polygon) == r(3, 16));
    // numbers are accepted where exactness is not required
    BodySpec t = parse_body_json(R"({"kind":"polygon","vertices":[[0,0],[1,0],[0,1]]})");
    CHECK(area2(*t.polygon) == r(1, 2));
}

TEST_CASE("parse regular_gon and disk_gon documents") {
    BodySpec s = parse_body_json(R"({"kind":"regular_gon","m":7})");
    CHECK(s.polygon->size() == 7);
    CHECK(s.approx_error == 1e-9);
    BodySpec d = parse_body_json(R"({"kind":"disk_gon","m":64,"tol":1e-6})");
    CHECK(d.polygon->size() == 64);
    CHECK(d.approx_error == 1e-6);
    CHECK_THROWS_AS(parse_body_json(R"({"kind":"regular_gon","m":2})"), ParseError);
    CHECK_THROWS_AS(parse_body_json(R"({"kind":"regular_gon"})"), ParseError);
    CHECK_THROWS_AS(parse_body_json(R"({"kind":"regular_gon","m":8,"tol":-1})"), ParseError);
}

TEST_CASE("parse solid bodies") {
    BodySpec ball = parse_body_json(R"({"kind":"ball","dim":3,"radius":2.0})");
    CHECK(ball.dim == 3);
    REQUIRE(ball.body.has_value());
    CHECK(std::get<nd::Ball>(*ball.body).radius == 2.0);
    CHECK(std::get<nd::Ball>(*ball.body).center == nd::VecN{0, 0, 0});

    BodySpec ell = parse_body_json(
        R"({"kind":"ellipsoid","semiaxes":[1,2,3],"center":[0.5,0,0]})");
    const auto& e = std::get<nd::Ellipsoid>(*ell.body);
    CHECK(e.semiaxes == nd::VecN{1, 2, 3});
    CHECK(e.orientation[0] == nd::VecN{1, 0, 0});

    BodySpec poly = parse_body_json(
        R"({"kind":"polytope","dim":3,"vertices":[[0,0,0],[1,0,0],[0,1,0],[0,0,1],
            [1,1,0],[1,0,1],[0,1,1],[1,1,1]]})");
    CHECK(std::fabs(nd::volume_nd(*poly.body) - 1.0) < 1e-10);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_body_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_body_json(R"({"vertices":[]})"), ParseError);
    CHECK_THROWS_AS(parse_body_json(R"({"kind":"mystery"})"), ParseError);
    CHECK_THROWS_AS(parse_body_json(R"({"kind":"polygon","vertices":[[0,0],[1,0]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_body_json(R"({"kind":"polygon","vertices":[["a","0"],[1,0],[0,1]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_body_json(R"({"kind":"ball","dim":9})"), ParseError);
    CHECK_THROWS_AS(parse_body_json(R"({"kind":"ball","dim":3,"radius":-1})"), ParseError);
    CHECK_THROWS_AS(parse_body_json(R"({"kind":"ellipsoid","semiaxes":[1]})"), ParseError);
    CHECK_THROWS_AS(
        parse_body_json(R"({"kind":"polytope","dim":3,"vertices":[[0,0,0],[1,0,0],[0,1,0]]})"),
        ParseError);  // not full-dimensional
    CHECK_THROWS_AS(parse_body_file("/nonexistent/body.json"), ParseError);
}

TEST_CASE("rational round-trip through documents") {
    BodySpec s = parse_body_json(
        R"({"kind":"polygon","vertices":[["-3/7","0"],["2/3","-1/9"],["0","5/11"]]})");
    const auto& v = s.polygon->vertices();
    bool found = false;
    for (const auto& p : v) found = found || (p == Vec2(r(2, 3), r(-1, 9)));
    CHECK(found);
}
