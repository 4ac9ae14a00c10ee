#include "hullvol/polygon_ops.hpp"

#include <algorithm>
#include <map>

#include "hullvol/errors.hpp"

namespace hullvol {

namespace {

// index of the bottom-most (then leftmost) vertex
std::size_t bottom_index(const std::vector<Vec2>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i].y < v[best].y || (v[i].y == v[best].y && v[i].x < v[best].x)) best = i;
    }
    return best;
}

Vec2 outward_normal(const Vec2& a, const Vec2& b) {
    Vec2 d = b - a;
    return {d.y, -d.x};
}

}  // namespace

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
    const auto& pv = p.vertices();
    const auto& qv = q.vertices();
    const std::size_t n = pv.size(), m = qv.size();
    const std::size_t p0 = bottom_index(pv), q0 = bottom_index(qv);

    std::vector<Vec2> out;
    out.reserve(n + m);
    Vec2 cur = pv[p0] + qv[q0];
    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
        out.push_back(cur);
        if (i < n && j < m) {
            Vec2 ep = pv[(p0 + i + 1) % n] - pv[(p0 + i) % n];
            Vec2 eq = qv[(q0 + j + 1) % m] - qv[(q0 + j) % m];
            if (half_plane(ep) == half_plane(eq) && cross(ep, eq) == 0) {
                cur = cur + ep + eq;
                ++i;
                ++j;
            } else if (angle_less(ep, eq)) {
                cur = cur + ep;
                ++i;
            } else {
                cur = cur + eq;
                ++j;
            }
        } else if (i < n) {
            cur = cur + (pv[(p0 + i + 1) % n] - pv[(p0 + i) % n]);
            ++i;
        } else {
            cur = cur + (qv[(q0 + j + 1) % m] - qv[(q0 + j) % m]);
            ++j;
        }
    }
    return ConvexPolygon(std::move(out));
}

ConvexPolygon difference_body(const ConvexPolygon& p) {
    return minkowski_sum(p, apply_motion(p, PointReflect{Vec2(0, 0)}));
}

ConvexPolygon central_symmetral(const ConvexPolygon& p) {
    ConvexPolygon d = difference_body(p);
    std::vector<Vec2> half;
    half.reserve(d.size());
    for (const auto& v : d.vertices()) half.push_back(v * Rational(1, 2));
    return ConvexPolygon(std::move(half));
}

Rational radial_param(const ConvexPolygon& d, const Vec2& v) {
    if (v.is_zero()) throw ZeroDirection();
    const auto& verts = d.vertices();
    bool found = false;
    Rational best(0);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        Vec2 n = outward_normal(verts[i], verts[(i + 1) % verts.size()]);
        Rational nv = dot(n, v);
        if (nv > 0) {
            Rational t = dot(n, verts[i]) / nv;
            if (!found || t < best) {
                best = t;
                found = true;
            }
        }
    }
    if (!found || best <= 0) throw DegenerateInput("origin is not interior to the body");
    return best;
}

Rational max_chord_param(const ConvexPolygon& p, const Vec2& v) {
    if (v.is_zero()) throw ZeroDirection();
    return radial_param(difference_body(p), v);
}

ConvexPolygon apply_motion(const ConvexPolygon& p, const Motion& m) {
    std::vector<Vec2> out;
    out.reserve(p.size());
    bool reversed = false;
    if (const auto* t = std::get_if<Translate>(&m)) {
        for (const auto& v : p.vertices()) out.push_back(v + t->offset);
    } else if (const auto* r = std::get_if<PointReflect>(&m)) {
        // -I has determinant +1 in the plane: orientation is preserved
        Vec2 twice = r->center + r->center;
        for (const auto& v : p.vertices()) out.push_back(twice - v);
    } else if (const auto* l = std::get_if<LineReflect>(&m)) {
        if (l->direction.is_zero()) throw ZeroDirection();
        const Rational dx = l->direction.x, dy = l->direction.y;
        const Rational den = dx * dx + dy * dy;
        const Rational m00 = (dx * dx - dy * dy) / den;
        const Rational m01 = 2 * dx * dy / den;
        // reflection matrix [[m00, m01], [m01, -m00]]
        for (const auto& v : p.vertices()) {
            Vec2 rel = v - l->point;
            out.push_back(l->point + Vec2(m00 * rel.x + m01 * rel.y, m01 * rel.x - m00 * rel.y));
        }
        reversed = true;
    } else {
        const auto& lm = std::get<LinearMap>(m);
        Rational det = lm.a * lm.d - lm.b * lm.c;
        if (det == 0) throw SingularMap();
        for (const auto& v : p.vertices())
            out.push_back(Vec2(lm.a * v.x + lm.b * v.y, lm.c * v.x + lm.d * v.y));
        reversed = det < 0;
    }
    if (reversed) std::reverse(out.begin(), out.end());
    return ConvexPolygon(std::move(out));
}

ConvexPolygon steiner2(const ConvexPolygon& p, const Vec2& axis) {
    if (axis.is_zero()) throw ZeroDirection();
    const Vec2 u = axis;
    const Vec2 w = rot90(u);
    const Rational uu = dot(u, u);

    // vertex coordinates in the (axis, axis-perp) frame
    const auto& verts = p.vertices();
    const std::size_t n = verts.size();
    std::vector<Rational> s(n), t(n);
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = dot(verts[i], u);
        t[i] = dot(verts[i], w);
    }

    std::vector<Rational> stations = s;
    std::sort(stations.begin(), stations.end());
    stations.erase(std::unique(stations.begin(), stations.end()), stations.end());

    // chord extent at each station: vertices there plus edge crossings
    std::map<Rational, std::pair<Rational, Rational>> extent;  // s -> (lo, hi)
    auto fold = [&](const Rational& sv, const Rational& tv) {
        auto it = extent.find(sv);
        if (it == extent.end())
            extent.emplace(sv, std::make_pair(tv, tv));
        else {
            if (tv < it->second.first) it->second.first = tv;
            if (tv > it->second.second) it->second.second = tv;
        }
    };
    for (std::size_t i = 0; i < n; ++i) fold(s[i], t[i]);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        if (s[i] == s[j]) continue;
        for (const auto& sv : stations) {
            bool between = (s[i] < sv && sv < s[j]) || (s[j] < sv && sv < s[i]);
            if (between) fold(sv, t[i] + (sv - s[i]) * (t[j] - t[i]) / (s[j] - s[i]));
        }
    }

    // recenter every chord on the axis and rebuild the boundary
    std::vector<Vec2> pts;
    pts.reserve(2 * stations.size());
    for (const auto& sv : stations) {
        const auto& [lo, hi] = extent.at(sv);
        Rational h = (hi - lo) / 2;
        Vec2 base = (u * sv + w * (-h)) * (Rational(1) / uu);
        pts.push_back(base);
        if (h != 0) pts.push_back((u * sv + w * h) * (Rational(1) / uu));
    }
    return hull2(std::move(pts));
}

ConvexPolygon polar_dual2(const ConvexPolygon& p) {
    if (!strictly_contains_point(p, Vec2(0, 0))) throw OriginNotInterior();
    const auto& verts = p.vertices();
    std::vector<Vec2> duals;
    duals.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        Vec2 n = outward_normal(verts[i], verts[(i + 1) % verts.size()]);
        Rational c = dot(n, verts[i]);
        duals.push_back(n * (Rational(1) / c));
    }
    return ConvexPolygon(std::move(duals));
}

}  // namespace hullvol
