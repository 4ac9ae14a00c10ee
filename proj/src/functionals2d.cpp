#include "hullvol/functionals2d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "hullvol/errors.hpp"

namespace hullvol {

namespace {

Vec2 edge_normal(const Vec2& a, const Vec2& b) {
    Vec2 d = b - a;
    return {d.y, -d.x};
}

Rational support_value(const ConvexPolygon& p, const Vec2& v) {
    const auto& verts = p.vertices();
    Rational best = dot(verts[0], v);
    for (std::size_t i = 1; i < verts.size(); ++i) {
        Rational d = dot(verts[i], v);
        if (d > best) best = d;
    }
    return best;
}

// Visits every critical direction of the o-symmetric difference body
// (vertex and edge directions) with the exact raw profile value
// f = t * w where t is the radial parameter and w the raw support of the
// body at the rotated direction. Single sweep, two monotone pointers.
void visit_critical_profile(
    const ConvexPolygon& d,
    const std::function<void(const Vec2& v, const Rational& t, const Rational& w,
                             const Rational& f)>& visit) {
    const auto& a = d.vertices();
    const std::size_t m = a.size();

    std::vector<Vec2> cand;
    cand.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        cand.push_back(a[i]);
        cand.push_back(a[(i + 1) % m] - a[i]);
    }
    // angular order starting from the position angle of a[0]
    const Vec2 ref = a[0];
    auto side_of = [&](const Vec2& u) {
        Rational c = cross(ref, u);
        if (c > 0) return 0;
        if (c == 0 && dot(ref, u) > 0) return 0;
        return 1;
    };
    std::sort(cand.begin(), cand.end(), [&](const Vec2& u, const Vec2& w) {
        int su = side_of(u), sw = side_of(w);
        if (su != sw) return su < sw;
        return cross(u, w) > 0;
    });
    cand.erase(std::unique(cand.begin(), cand.end(),
                           [](const Vec2& u, const Vec2& w) {
                               return cross(u, w) == 0 && dot(u, w) > 0;
                           }),
               cand.end());

    std::size_t j = 0;  // exit cone pointer: v in [pos(a_j), pos(a_{j+1}))
    std::size_t k = 0;  // support argmax pointer for rot90(v)
    {
        const Vec2& v0 = cand.front();
        std::size_t guard = 0;
        while (!(cross(a[j % m], v0) >= 0 && cross(v0, a[(j + 1) % m]) > 0)) {
            if (++j, ++guard > m + 1) throw GeometryError("exit cone not found");
        }
        Vec2 w0 = rot90(v0);
        Rational best = dot(a[0], w0);
        for (std::size_t i = 1; i < m; ++i) {
            Rational dv = dot(a[i], w0);
            if (dv > best) {
                best = dv;
                k = i;
            }
        }
    }

    for (const Vec2& v : cand) {
        std::size_t guard = 0;
        while (!(cross(a[j % m], v) >= 0 && cross(v, a[(j + 1) % m]) > 0)) {
            if (++j, ++guard > m + 1) throw GeometryError("exit cone sweep failed");
        }
        Rational t;
        if (cross(a[j % m], v) == 0) {
            const Vec2& q = a[j % m];
            t = (v.x != 0) ? q.x / v.x : q.y / v.y;
        } else {
            Vec2 n = edge_normal(a[j % m], a[(j + 1) % m]);
            t = dot(n, a[j % m]) / dot(n, v);
        }

        Vec2 w = rot90(v);
        guard = 0;
        while (dot(a[(k + 1) % m], w) > dot(a[k % m], w)) {
            if (++k, ++guard > m + 1) throw GeometryError("support sweep failed");
        }
        Rational wr = dot(a[k % m], w);
        visit(v, t, wr, t * wr);
    }
}

std::pair<Rational, Direction> tr_profile_extreme(const ConvexPolygon& d, bool want_max) {
    std::optional<Rational> best;
    std::optional<Direction> best_dir;
    visit_critical_profile(d, [&](const Vec2& v, const Rational&, const Rational&,
                                  const Rational& f) {
        Direction dir(v);
        bool better = !best || (want_max ? f > *best : f < *best);
        if (better) {
            best = f;
            best_dir = dir;
        } else if (f == *best && canonical_dir_less(dir, *best_dir)) {
            best_dir = dir;
        }
    });
    return {*best, *best_dir};
}

}  // namespace

std::pair<Rational, Direction> tr_profile_max(const ConvexPolygon& d) {
    return tr_profile_extreme(d, true);
}

std::pair<Rational, Direction> tr_profile_min(const ConvexPolygon& d) {
    return tr_profile_extreme(d, false);
}

Rational tr_profile_value(const ConvexPolygon& diff_body, const Vec2& v) {
    return radial_param(diff_body, v) * support_value(diff_body, rot90(v));
}

Rational hull_area_union(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<Vec2> pts = p.vertices();
    pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
    return area2(hull2(std::move(pts)));
}

FunctionalValue c_tr(const ConvexPolygon& p) {
    ConvexPolygon d = difference_body(p);
    auto [raw, dir] = tr_profile_max(d);
    Rational area = area2(p);
    Rational value = 1 + raw / area;

    FunctionalValue fv;
    fv.exact_value = value;
    fv.value = to_double(value);
    fv.exact = true;
    fv.maximizer = dir;
    fv.details.area = area;
    fv.details.chord_raw = radial_param(d, dir.v);
    fv.details.width_raw = support_value(d, rot90(dir.v));
    fv.details.hull_area = area + raw;
    return fv;
}

FunctionalValue c_0(const ConvexPolygon& p) {
    Rational area = area2(p);
    std::optional<Rational> best;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rational h = hull_area_union(p, apply_motion(p, PointReflect{p[i]}));
        if (!best || h > *best) {
            best = h;
            best_idx = i;
        }
    }
    FunctionalValue fv;
    fv.exact_value = *best / area;
    fv.value = to_double(fv.exact_value);
    fv.exact = true;
    fv.maximizer = best_idx;
    fv.details.area = area;
    fv.details.hull_area = *best;
    return fv;
}

// ---- float path for line reflections -------------------------------------

namespace {

using FPoint = std::array<double, 2>;

std::vector<FPoint> to_float(const ConvexPolygon& p) {
    std::vector<FPoint> out;
    out.reserve(p.size());
    for (const auto& v : p.vertices()) out.push_back({to_double(v.x), to_double(v.y)});
    return out;
}

double fcross(const FPoint& o, const FPoint& a, const FPoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double float_hull_area(std::vector<FPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return 0.0;
    std::vector<FPoint> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && fcross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && fcross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    double twice = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& a = h[i];
        const auto& b = h[(i + 1) % h.size()];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return 0.5 * twice;
}

// reflected-union hull area ratio for the supporting line with outer
// normal n(phi) = (-sin phi, cos phi)
double line_reflect_objective(const std::vector<FPoint>& pts, double area, double phi,
                              double* offset_out = nullptr) {
    const double nx = -std::sin(phi), ny = std::cos(phi);
    double h = -1e300;
    for (const auto& p : pts) h = std::max(h, p[0] * nx + p[1] * ny);
    if (offset_out) *offset_out = h;
    std::vector<FPoint> all = pts;
    all.reserve(2 * pts.size());
    for (const auto& p : pts) {
        double s = 2.0 * (h - (p[0] * nx + p[1] * ny));
        all.push_back({p[0] + s * nx, p[1] + s * ny});
    }
    return float_hull_area(std::move(all)) / area;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol,
                  double* arg_out) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    double mid = 0.5 * (a + b), fm = f(mid);
    if (arg_out) *arg_out = mid;
    return fm;
}

}  // namespace

FunctionalValue c_1(const ConvexPolygon& p, double tol, int grid) {
    if (!(tol > 0)) throw InvalidTolerance();
    auto pts = to_float(p);
    const double area = to_double(area2(p));
    const int n2 = 2 * grid;  // both supporting lines per direction
    const double step = 2.0 * M_PI / n2;

    std::vector<double> g(n2);
    for (int i = 0; i < n2; ++i) g[i] = line_reflect_objective(pts, area, i * step);

    // refine every strict local-maximum bracket, plus the best coarse
    // brackets (plateaus make non-strict maxima too numerous to refine all)
    std::vector<int> brackets;
    for (int i = 0; i < n2; ++i) {
        double prev = g[(i + n2 - 1) % n2], next = g[(i + 1) % n2];
        if ((g[i] > prev && g[i] >= next) || (g[i] >= prev && g[i] > next)) brackets.push_back(i);
    }
    {
        std::vector<int> order(n2);
        for (int i = 0; i < n2; ++i) order[i] = i;
        std::partial_sort(order.begin(), order.begin() + std::min(n2, 32), order.end(),
                          [&](int a, int b) { return g[a] > g[b]; });
        for (int i = 0; i < std::min(n2, 32); ++i) brackets.push_back(order[i]);
        std::sort(brackets.begin(), brackets.end());
        brackets.erase(std::unique(brackets.begin(), brackets.end()), brackets.end());
    }

    double best_val = -1e300, best_phi = 0;
    for (int i : brackets) {
        double lo = (i - 1) * step, hi = (i + 1) * step;
        double arg;
        double val = golden_max(
            [&](double phi) { return line_reflect_objective(pts, area, phi); }, lo, hi,
            std::min(tol, 1e-3) * 0.1, &arg);
        if (val > best_val) {
            best_val = val;
            best_phi = arg;
        }
    }

    double offset;
    best_val = std::max(best_val, line_reflect_objective(pts, area, best_phi, &offset));
    best_phi = std::fmod(best_phi + 2.0 * M_PI, 2.0 * M_PI);

    FunctionalValue fv;
    fv.value = best_val;
    fv.exact_value = rational_from_double(best_val);
    fv.exact = false;
    fv.maximizer = SupportLine{best_phi, offset};
    fv.details.area = area2(p);
    fv.details.hull_area = rational_from_double(best_val * area);
    return fv;
}

FunctionalValue c_1_triangle(const ConvexPolygon& t) {
    if (t.size() != 3) throw NotATriangle();
    auto pts = to_float(t);
    const double area = to_double(area2(t));

    double best_ratio = -1e300, best_angle = 0;
    for (int i = 0; i < 3; ++i) {
        const FPoint& v = pts[i];
        const FPoint& a = pts[(i + 1) % 3];
        const FPoint& b = pts[(i + 2) % 3];
        const double e1x = a[0] - v[0], e1y = a[1] - v[1];
        const double e2x = b[0] - v[0], e2y = b[1] - v[1];
        const double l1 = std::hypot(e1x, e1y), l2 = std::hypot(e2x, e2y);
        const double alpha =
            std::acos(std::clamp((e1x * e2x + e1y * e2y) / (l1 * l2), -1.0, 1.0));
        const double span = M_PI - alpha;  // beta + gamma
        const double e1ang = std::atan2(e1y, e1x);

        // Hull of {v, a, b, a', b'} for the line through v whose oriented
        // angle to [v, a] is beta.  The two gap triangles at v alone are not
        // enough: when the quadrilateral (a, b, b', a') fails to be convex
        // the hull picks up extra area, so we take the hull area directly.
        auto g = [&](double beta) {
            const double th = e1ang - beta;
            const double dx = std::cos(th), dy = std::sin(th);
            std::vector<FPoint> five = {v, a, b};
            for (const FPoint& p : {a, b}) {
                const double rx = p[0] - v[0], ry = p[1] - v[1];
                const double d = rx * dx + ry * dy;
                five.push_back({v[0] + 2 * d * dx - rx, v[1] + 2 * d * dy - ry});
            }
            return float_hull_area(std::move(five)) / area;
        };
        const int coarse = 4000;
        double bb = 0, bv = -1e300;
        for (int s = 0; s <= coarse; ++s) {
            double beta = span * s / coarse;
            double val = g(beta);
            if (val > bv) {
                bv = val;
                bb = beta;
            }
        }
        double lo = std::max(0.0, bb - span / coarse);
        double hi = std::min(span, bb + span / coarse);
        double beta_star;
        double ratio = golden_max(g, lo, hi, 1e-13, &beta_star);
        if (ratio > best_ratio) {
            best_ratio = ratio;
            // L direction: e1 rotated by -beta (beta is the oriented angle
            // from L to [v, a])
            best_angle = e1ang - beta_star;
        }
    }

    FunctionalValue fv;
    fv.value = best_ratio;
    fv.exact_value = rational_from_double(fv.value);
    fv.exact = false;
    fv.maximizer = SupportLine{std::fmod(best_angle + 2 * M_PI, M_PI), 0.0};
    fv.details.area = area2(t);
    return fv;
}

std::vector<std::pair<double, double>> profile_tr(const ConvexPolygon& p, int m) {
    if (m < 8) throw GeometryError("profile needs at least 8 samples");
    ConvexPolygon d = difference_body(p);
    std::vector<std::pair<double, double>> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) {
        double theta = M_PI * i / m;
        Vec2 v(snap_to_grid(std::cos(theta), 26), snap_to_grid(std::sin(theta), 26));
        out.emplace_back(theta, to_double(tr_profile_value(d, v)));
    }
    return out;
}

}  // namespace hullvol
