#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hullvol/bodyspec.hpp"
#include "hullvol/errors.hpp"
#include "hullvol/polygon_ops.hpp"
#include "hullvol/search2d.hpp"

using namespace hullvol;

namespace {
Rational r(long p, long q = 1) { return Rational(p, q); }
ConvexPolygon unit_square() { return hull2({Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)}); }
ConvexPolygon sym_square() {
    return hull2({Vec2(1, 1), Vec2(-1, 1), Vec2(-1, -1), Vec2(1, -1)});
}
ConvexPolygon tri() { return hull2({Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)}); }
}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(rational_from_string("3/4") == r(3, 4));
    CHECK(rational_from_string("-7") == r(-7));
    CHECK(rational_from_string("0.25") == r(1, 4));
    CHECK(rational_from_string("1e-3") == r(1, 1000));
    CHECK(rational_to_string(r(3, 4)) == "3/4");
    CHECK(rational_to_string(r(8, 4)) == "2");
    CHECK(rational_from_double(0.5) == r(1, 2));
    CHECK(denominator(rational_from_string("-6/4")) == 2);  // canonical form
}

TEST_CASE("snap_to_grid rounds to dyadic grid") {
    Rational s = snap_to_grid(1.0 / 3.0, 4);
    CHECK(s == r(5, 16));
    CHECK(snap_to_grid(0.5) == r(1, 2));
}

TEST_CASE("direction canonicalization") {
    Direction d(Vec2(r(4), r(-6)));
    CHECK(d.x() == 2);
    CHECK(d.y() == -3);
    Direction e(Vec2(r(-4), r(6)));  // flipped into canonical sign
    CHECK(e.x() == 2);
    CHECK(e.y() == -3);
    Direction up(Vec2(r(0), r(-5)));
    CHECK(up.x() == 0);
    CHECK(up.y() == 1);
    CHECK_THROWS_AS(Direction(Vec2(0, 0)), ZeroDirection);
    // angular order on (-pi/2, pi/2]
    CHECK(canonical_dir_less(Direction(Vec2(2, -1)), Direction(Vec2(2, 1))));
    CHECK(canonical_dir_less(Direction(Vec2(1, 0)), Direction(Vec2(0, 1))));
}

TEST_CASE("hull2 removes interior, collinear and duplicate points") {
    ConvexPolygon sq = hull2(
        {Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1), Vec2(r(1, 2), r(1, 2))});
    CHECK(sq.size() == 4);
    CHECK(sq == unit_square());
    ConvexPolygon t = hull2({Vec2(0, 0), Vec2(2, 0), Vec2(1, 0), Vec2(0, 2)});
    CHECK(t.size() == 3);
    CHECK_THROWS_AS(hull2({Vec2(0, 0), Vec2(1, 1), Vec2(2, 2)}), DegenerateInput);
    CHECK_THROWS_AS(hull2({Vec2(0, 0), Vec2(0, 0), Vec2(1, 1)}), DegenerateInput);
}

TEST_CASE("hull2 canonical start and idempotence") {
    ConvexPolygon p = hull2({Vec2(3, 1), Vec2(0, 0), Vec2(2, -1), Vec2(1, 2)});
    CHECK(p[0] == Vec2(0, 0));  // lexicographic minimum first
    for (int s = 0; s < 20; ++s) {
        ConvexPolygon q = random_polygon(5, 40 + s);
        CHECK(hull2(q.vertices()) == q);
    }
}

TEST_CASE("area2") {
    CHECK(area2(unit_square()) == 1);
    CHECK(area2(tri()) == r(1, 2));
    ConvexPolygon hexagon = regular_gon(6, 1e-9);
    double expect = 3.0 * std::sqrt(3.0) / 2.0;
    CHECK(std::fabs(to_double(area2(hexagon)) - expect) < 1e-8);
}

TEST_CASE("support2 reports value and achieving feature") {
    ConvexPolygon sq = unit_square();
    SupportResult a = support2(sq, Vec2(1, 0));
    CHECK(a.value == 1);
    CHECK(a.on_edge);
    SupportResult b = support2(sq, Vec2(1, 1));
    CHECK(b.value == 2);
    CHECK(!b.on_edge);
    CHECK(sq[b.vertex] == Vec2(1, 1));
    SupportResult c = support2(tri(), Vec2(-1, -1));
    CHECK(c.value == 0);
    CHECK(tri()[c.vertex] == Vec2(0, 0));
    CHECK_THROWS_AS(support2(sq, Vec2(0, 0)), ZeroDirection);
}

TEST_CASE("max_chord_param") {
    CHECK(max_chord_param(unit_square(), Vec2(1, 0)) == 1);
    CHECK(max_chord_param(unit_square(), Vec2(1, 1)) == 1);
    CHECK(max_chord_param(tri(), Vec2(1, -1)) == 1);
    // symmetry in v -> -v
    for (int s = 0; s < 10; ++s) {
        ConvexPolygon p = random_polygon(4 + s % 3, 900 + s);
        Vec2 v(r(s + 1, 3), r(2 * s - 7, 5));
        CHECK(max_chord_param(p, v) == max_chord_param(p, -v));
    }
}

TEST_CASE("minkowski_sum") {
    ConvexPolygon sq2 = minkowski_sum(unit_square(), unit_square());
    CHECK(area2(sq2) == 4);
    CHECK(sq2.size() == 4);
    ConvexPolygon hex = minkowski_sum(tri(), apply_motion(tri(), PointReflect{Vec2(0, 0)}));
    CHECK(hex.size() == 6);
    // oracle: hull of all pairwise vertex differences
    ConvexPolygon t = tri();
    std::vector<Vec2> diffs;
    for (const auto& a : t.vertices())
        for (const auto& b : t.vertices())
            if (!(a == b)) diffs.push_back(a - b);
    diffs.push_back(Vec2(0, 0));
    CHECK(hex == hull2(diffs));
    // area scaling property on random polygons
    for (int s = 0; s < 10; ++s) {
        ConvexPolygon p = random_polygon(5, 950 + s);
        CHECK(area2(minkowski_sum(p, p)) == 4 * area2(p));
    }
}

TEST_CASE("difference_body") {
    CHECK(difference_body(unit_square()) == sym_square());
    ConvexPolygon d = difference_body(tri());
    CHECK(d.size() == 6);
    // o-symmetry and doubling for o-symmetric inputs
    ConvexPolygon ds = difference_body(sym_square());
    CHECK(area2(ds) == 4 * area2(sym_square()));
    // radial consistency: t*v on the boundary, exactly
    for (int s = 0; s < 10; ++s) {
        ConvexPolygon p = random_polygon(3 + s % 4, 970 + s);
        Vec2 v(r(2 * s + 1, 3), r(s - 4, 7));
        Rational t = max_chord_param(p, v);
        ConvexPolygon db = difference_body(p);
        Vec2 x = v * t;
        CHECK(contains_point(db, x));
        CHECK(!strictly_contains_point(db, x));
    }
}

TEST_CASE("apply_motion") {
    ConvexPolygon sq = unit_square();
    ConvexPolygon moved = apply_motion(sq, Translate{Vec2(2, 0)});
    CHECK(moved[0] == Vec2(2, 0));
    CHECK(area2(moved) == 1);
    ConvexPolygon reflected = apply_motion(tri(), PointReflect{Vec2(0, 0)});
    CHECK(reflected == hull2({Vec2(0, 0), Vec2(-1, 0), Vec2(0, -1)}));
    ConvexPolygon mirrored = apply_motion(sq, LineReflect{Vec2(0, 0), Vec2(1, 0)});
    CHECK(mirrored == hull2({Vec2(0, 0), Vec2(1, 0), Vec2(1, -1), Vec2(0, -1)}));
    // slanted rational line reflection stays exact and preserves area
    ConvexPolygon slant = apply_motion(tri(), LineReflect{Vec2(1, 1), Vec2(2, 3)});
    CHECK(area2(slant) == area2(tri()));
    CHECK(apply_motion(slant, LineReflect{Vec2(1, 1), Vec2(2, 3)}) == tri());
    CHECK_THROWS_AS(apply_motion(sq, LinearMap{1, 2, 2, 4}), SingularMap);
    ConvexPolygon sheared = apply_motion(sq, LinearMap{1, 1, 0, 1});
    CHECK(area2(sheared) == 1);
}

TEST_CASE("steiner2") {
    ConvexPolygon sq = sym_square();
    CHECK(steiner2(sq, Vec2(1, 0)) == sq);
    ConvexPolygon t = hull2({Vec2(0, 0), Vec2(2, 0), Vec2(0, 2)});
    ConvexPolygon st = steiner2(t, Vec2(1, 0));
    CHECK(area2(st) == 2);
    // area preserved exactly on random polygons and rational axes
    for (int s = 0; s < 20; ++s) {
        ConvexPolygon p = random_polygon(3 + s % 5, 1000 + s);
        Vec2 axis(r(s % 7 - 3, 2), r(s % 5 + 1, 3));
        if (axis.is_zero()) axis = Vec2(1, 0);
        ConvexPolygon q = steiner2(p, axis);
        CHECK(area2(q) == area2(p));
        // symmetry about the axis: reflecting across it is the identity
        CHECK(apply_motion(q, LineReflect{Vec2(0, 0), axis}) == q);
    }
}

TEST_CASE("central_symmetral") {
    ConvexPolygon cs = central_symmetral(tri());
    ConvexPolygon expect = hull2({Vec2(r(1, 2), r(0)), Vec2(r(-1, 2), r(0)), Vec2(r(0), r(1, 2)),
                                  Vec2(r(0), r(-1, 2)), Vec2(r(1, 2), r(-1, 2)),
                                  Vec2(r(-1, 2), r(1, 2))});
    CHECK(cs == expect);
    CHECK(area2(cs) == r(3, 4));
}

TEST_CASE("polar_dual2") {
    ConvexPolygon diamond = hull2({Vec2(1, 0), Vec2(0, 1), Vec2(-1, 0), Vec2(0, -1)});
    CHECK(polar_dual2(sym_square()) == diamond);
    CHECK(polar_dual2(diamond) == sym_square());
    CHECK_THROWS_AS(polar_dual2(unit_square()), OriginNotInterior);
    for (int s = 0; s < 10; ++s) {
        ConvexPolygon p = difference_body(random_polygon(4, 1100 + s));  // o interior
        CHECK(polar_dual2(polar_dual2(p)) == p);
    }
}

TEST_CASE("planar hull identity, exact") {
    for (int s = 0; s < 25; ++s) {
        ConvexPolygon p = random_polygon(3 + s % 5, 1200 + s);
        Vec2 v(r(s + 1, 4), r(3 - s, 5));
        Rational t = max_chord_param(p, v);
        ConvexPolygon q = apply_motion(p, Translate{v * t});
        Rational lhs = hull_area_union(p, q);
        Rational rhs =
            area2(p) + t * (support2(p, rot90(v)).value + support2(p, -rot90(v)).value);
        CHECK(lhs == rhs);
    }
}
