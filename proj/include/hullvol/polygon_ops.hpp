#pragma once

#include <variant>

#include "hullvol/polygon.hpp"

namespace hullvol {

/// Exact Minkowski sum by merged edge rotation; O(|P| + |Q|).
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

/// P + (-P): o-symmetric, radial parameter along v equals max_chord_param.
ConvexPolygon difference_body(const ConvexPolygon& p);

/// (1/2)(P - P).
ConvexPolygon central_symmetral(const ConvexPolygon& p);

/// Largest t >= 0 with some translate x, x + t v both in P; equivalently
/// the radial parameter of the difference body along v. The geometric
/// maximal chord length is t * |v|.
Rational max_chord_param(const ConvexPolygon& p, const Vec2& v);

/// Radial parameter of an o-symmetric polygon d (origin interior) along v:
/// largest t with t v in d.
Rational radial_param(const ConvexPolygon& d, const Vec2& v);

struct Translate {
    Vec2 offset;
};
struct PointReflect {
    Vec2 center;
};
struct LineReflect {
    Vec2 point;
    Vec2 direction;  // need not be normalized; reflection matrix is rational
};
struct LinearMap {
    Rational a, b, c, d;  // row-major 2x2
};
using Motion = std::variant<Translate, PointReflect, LineReflect, LinearMap>;

/// Image polygon, orientation renormalized to CCW. Throws SingularMap for
/// a degenerate linear map.
ConvexPolygon apply_motion(const ConvexPolygon& p, const Motion& m);

/// Steiner symmetral about the line through the origin with direction
/// axis: every chord perpendicular to axis is recentered onto the axis.
/// Exact; preserves area.
ConvexPolygon steiner2(const ConvexPolygon& p, const Vec2& axis);

/// Polar dual; requires the origin strictly interior. Involutive.
ConvexPolygon polar_dual2(const ConvexPolygon& p);

}  // namespace hullvol
