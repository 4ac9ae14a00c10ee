#pragma once

#include <cstddef>
#include <vector>

#include "hullvol/vec2.hpp"

namespace hullvol {

/// Strictly convex polygon: vertices in CCW order, every consecutive
/// triple a strict left turn, canonical start at the lexicographic
/// minimum vertex. Immutable after construction.
class ConvexPolygon {
public:
    /// Validates CCW strict convexity; rotates to canonical start.
    explicit ConvexPolygon(std::vector<Vec2> vertices);

    const std::vector<Vec2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Vec2& operator[](std::size_t i) const { return verts_[i % verts_.size()]; }

    bool operator==(const ConvexPolygon& o) const { return verts_ == o.verts_; }

private:
    std::vector<Vec2> verts_;
};

/// Convex hull of >= 3 non-collinear points; removes duplicates and
/// collinear points. Throws DegenerateInput otherwise.
ConvexPolygon hull2(std::vector<Vec2> points);

/// Exact shoelace area (positive).
Rational area2(const ConvexPolygon& p);

struct SupportResult {
    Rational value;            // max over vertices of x . v (raw, not unit-normalized)
    std::size_t vertex;        // an achieving vertex
    std::size_t vertex2;       // second achieving vertex when an edge achieves it, else == vertex
    bool on_edge;
};

/// Raw support value h(v) = max_{x in P} x . v; reports the achieving
/// vertex or edge.
SupportResult support2(const ConvexPolygon& p, const Vec2& v);

/// true if q lies inside or on p.
bool contains_point(const ConvexPolygon& p, const Vec2& q);
/// true if q lies strictly inside p.
bool strictly_contains_point(const ConvexPolygon& p, const Vec2& q);

}  // namespace hullvol
