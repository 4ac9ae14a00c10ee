#pragma once

#include "hullvol/functionals2d.hpp"

namespace hullvol {

/// Boundary feature of an o-symmetric polygon hit by the ray from the
/// origin along a direction.
struct BoundaryFeature {
    bool is_vertex;
    std::size_t index;  // vertex index, or edge start index
    Rational param;     // t with t*dir on the boundary
};

/// Unit ball of a normed plane: an o-symmetric convex polygon.
class UnitBall2 {
public:
    /// Throws NotSymmetric unless every vertex has its antipode present.
    explicit UnitBall2(ConvexPolygon p);
    const ConvexPolygon& polygon() const { return poly_; }

private:
    ConvexPolygon poly_;
};

/// Feature of bd(p) hit by the ray from o along dir; requires o interior.
BoundaryFeature boundary_feature(const ConvexPolygon& p, const Vec2& dir);

/// Birkhoff orthogonality x ⊥_B y: x is parallel to a line supporting the
/// ball at the boundary scaling of y. Exact; cone boundaries inclusive.
bool birkhoff(const UnitBall2& b, const Vec2& x, const Vec2& y);

/// Exact combinatorial decision whether Birkhoff orthogonality is a
/// symmetric relation for this ball (i.e. whether bd B is a Radon curve).
bool is_radon(const UnitBall2& b);

/// A_K(x) = area(conv{o, x, y}) for x on bd(P) and y on the common
/// supporting line of P and 2x+P parallel to x. Exact; independent of the
/// choice of y (verified over the supporting segment).
Rational a_k_area(const ConvexPolygon& p, const Vec2& x);

/// Exactly scales a direction onto the boundary: returns t*dir on bd(p).
Vec2 scale_to_boundary(const ConvexPolygon& p, const Vec2& dir);

struct TcvDeviation {
    double min_f;
    double max_f;
    double ratio;  // max_f / min_f; 1 means the translative constant
                   // volume property holds on the tested set
};

/// Extremes of the profile f(u) = d(u) w(u-perp) over m grid directions
/// plus every critical direction of the difference body; the reported
/// extremes are the true ones.
TcvDeviation tcv_deviation(const ConvexPolygon& p, int m);

}  // namespace hullvol
