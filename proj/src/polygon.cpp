#include "hullvol/polygon.hpp"

#include <algorithm>

#include "hullvol/errors.hpp"

namespace hullvol {

namespace {

std::size_t lex_min_index(const std::vector<Vec2>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (lex_less(v[i], v[best])) best = i;
    return best;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices) : verts_(std::move(vertices)) {
    const std::size_t n = verts_.size();
    if (n < 3) throw DegenerateInput("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = verts_[i];
        const Vec2& b = verts_[(i + 1) % n];
        const Vec2& c = verts_[(i + 2) % n];
        if (cross(b - a, c - b) <= 0)
            throw DegenerateInput("vertices are not in strictly convex CCW position");
    }
    std::rotate(verts_.begin(), verts_.begin() + static_cast<long>(lex_min_index(verts_)),
                verts_.end());
}

ConvexPolygon hull2(std::vector<Vec2> points) {
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n < 3) throw DegenerateInput("fewer than 3 distinct points");

    // monotone chain with strict turns (collinear points dropped)
    std::vector<Vec2> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], points[i] - h[k - 1]) <= 0) --k;
        h[k++] = points[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 1] - h[k - 2], points[i] - h[k - 1]) <= 0) --k;
        h[k++] = points[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) throw DegenerateInput("all points are collinear");
    return ConvexPolygon(std::move(h));
}

Rational area2(const ConvexPolygon& p) {
    Rational twice(0);
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
    return twice / 2;
}

SupportResult support2(const ConvexPolygon& p, const Vec2& v) {
    if (v.is_zero()) throw ZeroDirection();
    const auto& verts = p.vertices();
    SupportResult r{dot(verts[0], v), 0, 0, false};
    for (std::size_t i = 1; i < verts.size(); ++i) {
        Rational d = dot(verts[i], v);
        if (d > r.value) {
            r.value = d;
            r.vertex = i;
            r.vertex2 = i;
            r.on_edge = false;
        } else if (d == r.value) {
            r.vertex2 = i;
            r.on_edge = true;
        }
    }
    return r;
}

bool contains_point(const ConvexPolygon& p, const Vec2& q) {
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (cross(v[(i + 1) % v.size()] - v[i], q - v[i]) < 0) return false;
    return true;
}

bool strictly_contains_point(const ConvexPolygon& p, const Vec2& q) {
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (cross(v[(i + 1) % v.size()] - v[i], q - v[i]) <= 0) return false;
    return true;
}

}  // namespace hullvol
