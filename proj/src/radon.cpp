#include "hullvol/radon.hpp"

#include <algorithm>

#include "hullvol/errors.hpp"

namespace hullvol {

namespace {

bool in_cone(const Vec2& lo, const Vec2& hi, const Vec2& z) {
    return cross(lo, z) >= 0 && cross(z, hi) >= 0;
}

// closed cone of supporting-line directions at vertex i (spanned by the
// adjacent edge vectors in CCW order)
std::pair<Vec2, Vec2> vertex_cone(const ConvexPolygon& p, std::size_t i) {
    const std::size_t n = p.size();
    Vec2 e_prev = p[i] - p[(i + n - 1) % n];
    Vec2 e_next = p[(i + 1) % n] - p[i];
    return {e_prev, e_next};
}

bool line_in_vertex_cone(const ConvexPolygon& p, std::size_t i, const Vec2& x) {
    auto [lo, hi] = vertex_cone(p, i);
    return in_cone(lo, hi, x) || in_cone(lo, hi, -x);
}

}  // namespace

UnitBall2::UnitBall2(ConvexPolygon p) : poly_(std::move(p)) {
    std::vector<Vec2> v = poly_.vertices();
    std::sort(v.begin(), v.end(), lex_less);
    for (const auto& q : poly_.vertices()) {
        Vec2 neg = -q;
        if (!std::binary_search(v.begin(), v.end(), neg, lex_less)) throw NotSymmetric();
    }
}

BoundaryFeature boundary_feature(const ConvexPolygon& p, const Vec2& dir) {
    if (dir.is_zero()) throw ZeroDirection();
    const auto& a = p.vertices();
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        Rational c0 = cross(a[i], dir);
        Rational c1 = cross(dir, a[(i + 1) % n]);
        if (c0 == 0 && dot(a[i], dir) > 0) {
            Rational t = (dir.x != 0) ? a[i].x / dir.x : a[i].y / dir.y;
            return {true, i, t};
        }
        if (c0 > 0 && c1 > 0) {
            Vec2 d = a[(i + 1) % n] - a[i];
            Vec2 normal{d.y, -d.x};
            Rational t = dot(normal, a[i]) / dot(normal, dir);
            return {false, i, t};
        }
    }
    throw DegenerateInput("origin is not interior to the polygon");
}

bool birkhoff(const UnitBall2& b, const Vec2& x, const Vec2& y) {
    if (x.is_zero() || y.is_zero()) throw ZeroDirection();
    const ConvexPolygon& p = b.polygon();
    BoundaryFeature f = boundary_feature(p, y);
    if (f.is_vertex) return line_in_vertex_cone(p, f.index, x);
    Vec2 e = p[f.index + 1] - p[f.index];
    return cross(x, e) == 0;
}

bool is_radon(const UnitBall2& b) {
    const ConvexPolygon& p = b.polygon();
    const std::size_t n = p.size();

    // Edge condition: for y in the relative interior of edge i the only
    // Birkhoff-orthogonal directions are parallel to the edge; symmetry
    // then demands that this direction hits a vertex whose supporting cone
    // contains every point direction of the edge.
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 d = p[i + 1] - p[i];
        BoundaryFeature f = boundary_feature(p, d);
        if (!f.is_vertex) return false;
        auto [lo, hi] = vertex_cone(p, f.index);
        bool plus = in_cone(lo, hi, p[i]) && in_cone(lo, hi, p[i + 1]);
        bool minus = in_cone(lo, hi, -p[i]) && in_cone(lo, hi, -p[i + 1]);
        if (!plus && !minus) return false;
    }

    // Vertex condition: x sweeps the supporting cone at vertex i; every
    // boundary feature met by that angular arc must support a line
    // parallel to the vertex direction.
    for (std::size_t i = 0; i < n; ++i) {
        auto [lo, hi] = vertex_cone(p, i);
        BoundaryFeature start = boundary_feature(p, lo);
        BoundaryFeature stop = boundary_feature(p, hi);
        const Vec2& v = p[i];

        // walk boundary features CCW from start to stop, both inclusive;
        // feature code: vertex k -> 2k, open edge k -> 2k+1
        std::size_t c = 2 * start.index + (start.is_vertex ? 0 : 1);
        const std::size_t stop_code = 2 * stop.index + (stop.is_vertex ? 0 : 1);
        for (std::size_t guard = 0;; c = (c + 1) % (2 * n), ++guard) {
            if (guard > 2 * n + 1) throw GeometryError("radon feature walk failed");
            if (c % 2 == 0) {
                if (!line_in_vertex_cone(p, c / 2, v)) return false;
            } else {
                if (cross(v, p[c / 2 + 1] - p[c / 2]) != 0) return false;
            }
            if (c == stop_code) break;
        }
    }
    return true;
}

Vec2 scale_to_boundary(const ConvexPolygon& p, const Vec2& dir) {
    BoundaryFeature f = boundary_feature(p, dir);
    return dir * f.param;
}

Rational a_k_area(const ConvexPolygon& p, const Vec2& x) {
    UnitBall2 ball(p);  // throws NotSymmetric when not o-symmetric
    if (x.is_zero()) throw ZeroDirection();
    BoundaryFeature f = boundary_feature(p, x);
    if (f.param != 1) throw NotOnBoundary();

    // supporting feature in direction rot90(x); area is constant along it
    SupportResult s = support2(p, rot90(x));
    Rational a1 = abs(cross(x, p[s.vertex])) / 2;
    Rational a2 = abs(cross(x, p[s.vertex2])) / 2;
    if (a1 != a2) throw GeometryError("A_K(x) not constant along supporting segment");
    return a1;
}

TcvDeviation tcv_deviation(const ConvexPolygon& p, int m) {
    if (m < 64) throw GeometryError("tcv_deviation needs at least 64 samples");
    ConvexPolygon d = difference_body(p);
    auto [max_raw, max_dir] = tr_profile_max(d);
    auto [min_raw, min_dir] = tr_profile_min(d);
    // grid directions lie between the critical extremes; folded in anyway
    double lo = to_double(min_raw), hi = to_double(max_raw);
    for (int i = 0; i < m; ++i) {
        double theta = M_PI * i / m;
        Vec2 v(snap_to_grid(std::cos(theta), 26), snap_to_grid(std::sin(theta), 26));
        double f = to_double(tr_profile_value(d, v));
        lo = std::min(lo, f);
        hi = std::max(hi, f);
    }
    return {lo, hi, hi / lo};
}

}  // namespace hullvol
