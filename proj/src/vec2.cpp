#include "hullvol/vec2.hpp"

#include <boost/multiprecision/integer.hpp>

#include "hullvol/errors.hpp"

namespace hullvol {

Vec2 primitive_vector(const Vec2& w) {
    if (w.is_zero()) throw ZeroDirection();
    Int a = numerator(w.x) * denominator(w.y);
    Int b = numerator(w.y) * denominator(w.x);
    // w scaled by den(x)*den(y) > 0, so orientation is preserved
    Int g = boost::multiprecision::gcd(abs(a), abs(b));
    a /= g;
    b /= g;
    return {Rational(a), Rational(b)};
}

Direction::Direction(const Vec2& w) {
    Vec2 p = primitive_vector(w);
    if (p.x < 0 || (p.x == 0 && p.y < 0)) p = -p;
    v = p;
}

bool angle_less(const Vec2& a, const Vec2& b) {
    int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

bool canonical_dir_less(const Direction& a, const Direction& b) {
    // canonical representatives lie in the half turn (-pi/2, pi/2], where
    // angular order is exactly the sign of the cross product
    return cross(a.v, b.v) > 0;
}

}  // namespace hullvol
