#include "hullvol/search2d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "hullvol/errors.hpp"

namespace hullvol {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::optional<ConvexPolygon> polygon_from_coords(const std::vector<double>& coords, int m) {
    std::vector<Vec2> pts;
    pts.reserve(m);
    for (int i = 0; i < m; ++i)
        pts.emplace_back(snap_to_grid(coords[2 * i]), snap_to_grid(coords[2 * i + 1]));
    try {
        ConvexPolygon p = hull2(std::move(pts));
        if (static_cast<int>(p.size()) != m) return std::nullopt;
        return p;
    } catch (const GeometryError&) {
        return std::nullopt;
    }
}

struct Moments {
    double area;
    double cx, cy;
    double cxx, cxy, cyy;  // second moments about the centroid, per unit area
};

Moments polygon_moments(const ConvexPolygon& p) {
    const std::size_t n = p.size();
    std::vector<std::array<double, 2>> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = {to_double(p[i].x), to_double(p[i].y)};
    double a = 0, cx = 0, cy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = v[i];
        const auto& t = v[(i + 1) % n];
        double cr = s[0] * t[1] - s[1] * t[0];
        a += cr / 2;
        cx += cr * (s[0] + t[0]) / 6;
        cy += cr * (s[1] + t[1]) / 6;
    }
    cx /= a;
    cy /= a;
    // fan triangulation from the centroid; edge-midpoint quadrature is
    // exact for quadratics on each triangle
    double cxx = 0, cxy = 0, cyy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double ax = v[i][0] - cx, ay = v[i][1] - cy;
        double bx = v[(i + 1) % n][0] - cx, by = v[(i + 1) % n][1] - cy;
        double tri = (ax * by - ay * bx) / 2;
        double mx[3] = {ax / 2, bx / 2, (ax + bx) / 2};
        double my[3] = {ay / 2, by / 2, (ay + by) / 2};
        for (int k = 0; k < 3; ++k) {
            cxx += tri / 3 * mx[k] * mx[k];
            cxy += tri / 3 * mx[k] * my[k];
            cyy += tri / 3 * my[k] * my[k];
        }
    }
    return {a, cx, cy, cxx / a, cxy / a, cyy / a};
}

ConvexPolygon rebuild(const std::vector<std::array<double, 2>>& pts) {
    std::vector<Vec2> v;
    v.reserve(pts.size());
    for (const auto& q : pts) v.emplace_back(snap_to_grid(q[0]), snap_to_grid(q[1]));
    return hull2(std::move(v));
}

double nm_objective(const SearchConfig& cfg, const std::vector<double>& coords) {
    auto poly = polygon_from_coords(coords, cfg.m);
    if (!poly) return kInf;
    switch (cfg.functional) {
        case Functional2D::tr:
            return c_tr(*poly).value;
        case Functional2D::c0:
            return c_0(*poly).value;
        case Functional2D::c1:
            return c_1(*poly, cfg.c1_inner_tol, 128).value;
    }
    return kInf;
}

std::vector<double> nelder_mead(const SearchConfig& cfg, std::vector<double> x0,
                                double scale, double& fbest) {
    const int d = static_cast<int>(x0.size());
    std::vector<std::vector<double>> simplex(d + 1, x0);
    for (int i = 0; i < d; ++i) simplex[i + 1][i] += scale;
    std::vector<double> f(d + 1);
    for (int i = 0; i <= d; ++i) f[i] = nm_objective(cfg, simplex[i]);

    std::vector<int> order(d + 1);
    for (int it = 0; it < cfg.max_iters; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return f[a] < f[b]; });
        {
            std::vector<std::vector<double>> s2(d + 1);
            std::vector<double> f2(d + 1);
            for (int i = 0; i <= d; ++i) {
                s2[i] = simplex[order[i]];
                f2[i] = f[order[i]];
            }
            simplex = std::move(s2);
            f = std::move(f2);
        }
        double diam = 0;
        for (int i = 1; i <= d; ++i)
            for (int k = 0; k < d; ++k)
                diam = std::max(diam, std::fabs(simplex[i][k] - simplex[0][k]));
        if (diam < cfg.tol) break;

        std::vector<double> centroid(d, 0.0);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) centroid[k] += simplex[i][k] / d;

        auto affine = [&](double t) {
            std::vector<double> x(d);
            for (int k = 0; k < d; ++k) x[k] = centroid[k] + t * (simplex[d][k] - centroid[k]);
            return x;
        };
        auto xr = affine(-1.0);
        double fr = nm_objective(cfg, xr);
        if (fr < f[0]) {
            auto xe = affine(-2.0);
            double fe = nm_objective(cfg, xe);
            if (fe < fr) {
                simplex[d] = std::move(xe);
                f[d] = fe;
            } else {
                simplex[d] = std::move(xr);
                f[d] = fr;
            }
        } else if (fr < f[d - 1]) {
            simplex[d] = std::move(xr);
            f[d] = fr;
        } else {
            double t = fr < f[d] ? -0.5 : 0.5;
            auto xc = affine(t);
            double fc = nm_objective(cfg, xc);
            if (fc < std::min(fr, f[d])) {
                simplex[d] = std::move(xc);
                f[d] = fc;
            } else {
                for (int i = 1; i <= d; ++i) {
                    for (int k = 0; k < d; ++k)
                        simplex[i][k] = simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
                    f[i] = nm_objective(cfg, simplex[i]);
                }
            }
        }
    }
    int best = static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin());
    fbest = f[best];
    return simplex[best];
}

}  // namespace

ConvexPolygon random_polygon(int m, std::uint64_t seed) {
    if (m < 3) throw GeometryError("random_polygon needs m >= 3");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        double a = 0.6 + unif(rng), b = 0.6 + unif(rng);
        double rot = 2 * M_PI * unif(rng);
        double cr = std::cos(rot), sr = std::sin(rot);
        std::vector<Vec2> pts;
        pts.reserve(m);
        for (int i = 0; i < m; ++i) {
            double theta = 2 * M_PI * (i + 0.35 * (2 * unif(rng) - 1)) / m;
            double x = a * std::cos(theta), y = b * std::sin(theta);
            pts.emplace_back(snap_to_grid(cr * x - sr * y), snap_to_grid(sr * x + cr * y));
        }
        try {
            ConvexPolygon p = hull2(std::move(pts));
            if (static_cast<int>(p.size()) == m) return p;
        } catch (const GeometryError&) {
        }
    }
    throw GenerationFailure("random_polygon exhausted retries");
}

ConvexPolygon affine_normalize(const ConvexPolygon& p) {
    Moments mo = polygon_moments(p);
    // whiten the second-moment matrix: C = R diag(d) R^T, W = diag(d^-1/2) R^T
    double ct = 1, st = 0, d0 = mo.cxx, d1 = mo.cyy;
    double mag = std::max({std::fabs(mo.cxx), std::fabs(mo.cyy), 1e-300});
    if (std::fabs(mo.cxy) > 1e-14 * mag) {
        double theta = 0.5 * std::atan2(2 * mo.cxy, mo.cxx - mo.cyy);
        ct = std::cos(theta);
        st = std::sin(theta);
        d0 = ct * ct * mo.cxx + 2 * ct * st * mo.cxy + st * st * mo.cyy;
        d1 = st * st * mo.cxx - 2 * ct * st * mo.cxy + ct * ct * mo.cyy;
    }
    if (!(d0 > 0) || !(d1 > 0)) throw DegenerateInput("degenerate second-moment matrix");
    double s0 = 1 / std::sqrt(d0), s1 = 1 / std::sqrt(d1);
    std::vector<std::array<double, 2>> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        double x = to_double(p[i].x) - mo.cx, y = to_double(p[i].y) - mo.cy;
        double u = ct * x + st * y, v = -st * x + ct * y;
        out.push_back({s0 * u, s1 * v});
    }
    double area = mo.area * s0 * s1;
    double scale = 1 / std::sqrt(area);
    for (auto& q : out) {
        q[0] *= scale;
        q[1] *= scale;
    }
    return rebuild(out);
}

ConvexPolygon similarity_normalize(const ConvexPolygon& p) {
    Moments mo = polygon_moments(p);
    double scale = 1 / std::sqrt(mo.area);
    std::vector<std::array<double, 2>> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out.push_back({(to_double(p[i].x) - mo.cx) * scale, (to_double(p[i].y) - mo.cy) * scale});
    return rebuild(out);
}

double regularity_deviation(const ConvexPolygon& p) {
    const std::size_t n = p.size();
    Rational lo, hi;
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 u = p[i] - p[(i + n - 1) % n];
        Vec2 v = p[i + 1] - p[i];
        Rational a = abs(cross(u, v)) / 2;
        if (i == 0) {
            lo = hi = a;
        } else {
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
    }
    return to_double((hi - lo) / area2(p));
}

std::optional<double> known_floor(Functional2D f, int m) {
    switch (f) {
        case Functional2D::tr:
            if (m == 3 || m == 4) return 3.0;
            if (m == 5) return (10.0 + std::sqrt(5.0)) / 5.0;
            break;
        case Functional2D::c0:
            if (m == 3) return 4.0;
            if (m == 4) return 3.0;
            if (m == 5) return 3.0 - std::sqrt(5.0) / 5.0;  // 2 + (8/5) sin^2(pi/5)
            break;
        case Functional2D::c1:
            if (m == 3) return 4.0;
            if (m == 4) return 3.0;
            break;
    }
    return std::nullopt;
}

SearchResult minimize_functional(const SearchConfig& cfg) {
    if (cfg.m < 3 || cfg.restarts < 1 || !(cfg.tol > 0))
        throw GeometryError("invalid search configuration");

    std::vector<RestartOutcome> outcomes;
    std::optional<std::vector<double>> best_coords;
    double best_value = kInf;
    int best_restart = -1;

    for (int r = 0; r < cfg.restarts; ++r) {
        std::uint64_t seed_r = cfg.seed + static_cast<std::uint64_t>(r);
        ConvexPolygon start = random_polygon(cfg.m, seed_r);
        start = cfg.functional == Functional2D::c1 ? similarity_normalize(start)
                                                   : affine_normalize(start);
        std::vector<double> x0;
        double diam = 0;
        for (std::size_t i = 0; i < start.size(); ++i) {
            x0.push_back(to_double(start[i].x));
            x0.push_back(to_double(start[i].y));
            for (std::size_t j = 0; j < i; ++j) {
                double dx = to_double(start[i].x - start[j].x);
                double dy = to_double(start[i].y - start[j].y);
                diam = std::max(diam, std::hypot(dx, dy));
            }
        }
        double fbest = kInf;
        auto coords = nelder_mead(cfg, std::move(x0), 0.1 * diam, fbest);
        outcomes.push_back({seed_r, fbest});
        if (fbest < best_value) {
            best_value = fbest;
            best_coords = std::move(coords);
            best_restart = r;
        }
    }
    (void)best_restart;
    if (!best_coords) throw GenerationFailure("no restart produced a valid polygon");

    auto poly = polygon_from_coords(*best_coords, cfg.m);
    if (!poly) throw GeometryError("winning coordinates are not a convex m-gon");
    // re-evaluate the winner at full precision
    double value;
    switch (cfg.functional) {
        case Functional2D::tr:
            value = c_tr(*poly).value;
            break;
        case Functional2D::c0:
            value = c_0(*poly).value;
            break;
        default:
            value = c_1(*poly, cfg.c1_inner_tol).value;
            break;
    }
    if (auto floor = known_floor(cfg.functional, cfg.m); floor && value < *floor - 1e-6)
        throw GeometryError("search value below the proven minimum; evaluation bug");

    std::sort(outcomes.begin(), outcomes.end(),
              [](const RestartOutcome& a, const RestartOutcome& b) { return a.value < b.value; });
    return {*poly, value, std::move(outcomes), regularity_deviation(*poly)};
}

}  // namespace hullvol
