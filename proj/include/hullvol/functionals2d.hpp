#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hullvol/polygon_ops.hpp"

namespace hullvol {

/// Supporting line given by its direction angle and signed offset:
/// { x : x . (-sin a, cos a) = offset }.
struct SupportLine {
    double angle;
    double offset;
};

struct Breakdown {
    Rational area;       // area(P)
    Rational chord_raw;  // t = max_chord_param at the maximizer (exact paths)
    Rational width_raw;  // raw support sum at the rotated maximizer
    Rational hull_area;  // hull area at the maximizer (reflection paths)
};

/// Computed functional value with its maximizer certificate.
struct FunctionalValue {
    Rational exact_value;  // meaningful when exact
    double value;
    bool exact;
    std::variant<std::size_t, Direction, SupportLine> maximizer;
    Breakdown details;
};

/// Exact area of conv(P ∪ Q).
Rational hull_area_union(const ConvexPolygon& p, const ConvexPolygon& q);

/// c^tr(P) = 1 + max_u d(u) w(u-perp) / area(P), exact. The maximum is
/// attained at a critical direction of the difference body (a vertex or
/// edge direction); ties break to the smallest canonical direction.
FunctionalValue c_tr(const ConvexPolygon& p);

/// c_0(P) = max over vertices z of area(conv(P ∪ (2z - P))) / area(P),
/// exact; vertex sufficiency follows from convexity of the objective in z.
FunctionalValue c_0(const ConvexPolygon& p);

/// c_1(P): max over supporting lines of area(conv(P ∪ reflect(P))) / area(P),
/// float path: uniform angle grid (default 2048) plus golden-section
/// refinement of every local-maximum bracket to tol.
FunctionalValue c_1(const ConvexPolygon& p, double tol, int grid = 2048);

/// Closed-form/root-solve evaluation of c_1 for triangles; independent of
/// the generic c_1 search path.
FunctionalValue c_1_triangle(const ConvexPolygon& t);

/// Uniform samples of the exact profile f(theta) = d(theta) w(theta-perp)
/// over [0, pi).
std::vector<std::pair<double, double>> profile_tr(const ConvexPolygon& p, int m);

/// Exact profile value f = d(v) w(v-perp) (scale-free in |v|) for a
/// rational direction v.
Rational tr_profile_value(const ConvexPolygon& diff_body, const Vec2& v);

/// Exact maximum of the translate profile over the difference body's
/// critical directions. Returns (max raw value, maximizing direction).
std::pair<Rational, Direction> tr_profile_max(const ConvexPolygon& diff_body);

/// Exact minimum over the same critical set (the profile extremes both
/// occur at critical directions).
std::pair<Rational, Direction> tr_profile_min(const ConvexPolygon& diff_body);

}  // namespace hullvol
