#pragma once

#include <compare>

#include "hullvol/rational.hpp"

namespace hullvol {

struct Vec2 {
    Rational x, y;

    Vec2() : x(0), y(0) {}
    Vec2(Rational xx, Rational yy) : x(std::move(xx)), y(std::move(yy)) {}
    Vec2(long xx, long yy) : x(xx), y(yy) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const Rational& s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool is_zero() const { return x == 0 && y == 0; }
};

inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
/// Counterclockwise quarter turn.
inline Vec2 rot90(const Vec2& v) { return {-v.y, v.x}; }

/// Lexicographic (x, then y); used for canonical hull start vertices.
inline bool lex_less(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

/// Nonzero direction; canonical form is a primitive integer vector with
/// lexicographically positive sign: x > 0, or x = 0 and y > 0.
struct Direction {
    Vec2 v;

    explicit Direction(const Vec2& w);
    const Rational& x() const { return v.x; }
    const Rational& y() const { return v.y; }
    bool operator==(const Direction& o) const { return v == o.v; }
};

/// Primitive integer vector parallel to w, orientation preserved.
Vec2 primitive_vector(const Vec2& w);

/// Total order on directions used for deterministic tie-breaks:
/// angular order of the canonical representative starting at +x.
bool canonical_dir_less(const Direction& a, const Direction& b);

/// Half-plane index for angular ordering: 0 for canonical-sign vectors
/// (angle in [0, pi)), 1 otherwise.
inline int half_plane(const Vec2& v) {
    if (v.y > 0 || (v.y == 0 && v.x > 0)) return 0;
    return 1;
}

/// Exact angular comparison over the full turn, angles measured from +x CCW.
/// half_index uses y-sign: [0,pi) first.
bool angle_less(const Vec2& a, const Vec2& b);

struct Line2 {
    Vec2 point;
    Direction direction;
    Line2(Vec2 p, Direction d) : point(std::move(p)), direction(std::move(d)) {}
};

}  // namespace hullvol
