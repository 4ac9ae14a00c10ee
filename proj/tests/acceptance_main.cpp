// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Expected total runtime: a few minutes.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hullvol/bodies_nd.hpp"
#include "hullvol/bodyspec.hpp"
#include "hullvol/functionals2d.hpp"
#include "hullvol/radon.hpp"
#include "hullvol/search2d.hpp"

using namespace hullvol;
using nd::VecN;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %2d [%s] %s%s%s\n", idx, pass ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

Rational r(long p, long q = 1) { return Rational(p, q); }

ConvexPolygon unit_square() { return hull2({Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)}); }

ConvexPolygon equilateral() {
    Rational h = rationalize(std::sqrt(3.0) / 2, 1e-12);
    return hull2({Vec2(1, 0), Vec2(r(-1, 2), h), Vec2(r(-1, 2), -h)});
}

std::vector<VecN> cube_vertices3() {
    std::vector<VecN> v;
    for (int m = 0; m < 8; ++m)
        v.push_back({double(m & 1), double((m >> 1) & 1), double((m >> 2) & 1)});
    return v;
}

nd::Polytope cube3() { return nd::make_polytope(3, cube_vertices3()); }

nd::Polytope regular_simplex3() {
    const double s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
    return nd::make_polytope(
        3, {{0, 0, 0}, {1, 0, 0}, {0.5, s3 / 2, 0}, {0.5, s3 / 6, s6 / 3}});
}

VecN unit(VecN v) {
    double n = 0;
    for (double c : v) n += c * c;
    n = std::sqrt(n);
    for (double& c : v) c /= n;
    return v;
}

nd::Polytope random_polytope3(std::uint64_t seed, int npts = 24) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<VecN> pts;
    for (int i = 0; i < npts; ++i) {
        VecN p = {g(rng), g(rng), g(rng)};
        double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        for (double& c : p) c /= std::max(n, 1e-9);
        pts.push_back(p);
    }
    return nd::make_polytope(3, std::move(pts));
}

// ---------- criterion 1 -----------------------------------------------------

void criterion1() {
    bool ok = true;
    std::string detail;
    for (int s = 0; s < 1000 && ok; ++s) {
        if (c_tr(random_polygon(3, 10000 + s)).exact_value != 3) {
            ok = false;
            detail = "triangle seed " + std::to_string(10000 + s);
        }
    }
    for (int s = 0; s < 1000 && ok; ++s) {
        if (c_tr(random_polygon(4, 20000 + s)).exact_value != 3) {
            ok = false;
            detail = "quadrilateral seed " + std::to_string(20000 + s);
        }
    }
    report(1, "translate functional is exactly 3 on 1000 triangles and 1000 quadrilaterals", ok,
           detail);
}

// ---------- criterion 2 -----------------------------------------------------

void criterion2() {
    const double t5 = (10.0 + std::sqrt(5.0)) / 5.0;
    FunctionalValue f = c_tr(regular_gon(5, 1e-9));
    bool ok = std::fabs(f.value - t5) < 1e-6;
    std::ostringstream detail;
    detail << "pentagon value " << f.value;

    SearchConfig cfg;
    cfg.m = 5;
    cfg.functional = Functional2D::tr;
    cfg.restarts = 50;
    cfg.seed = 7;
    SearchResult res = minimize_functional(cfg);
    detail << ", search best " << res.value << ", regularity " << res.regularity;
    ok = ok && res.value <= t5 + 1e-4 && res.value >= t5 - 1e-6 && res.regularity <= 1e-3;
    report(2, "pentagon translate minimum (10+sqrt 5)/5 reached by 50-restart search", ok,
           detail.str());
}

// ---------- criterion 3 -----------------------------------------------------

void criterion3() {
    bool ok = true;
    std::string detail;
    for (int s = 0; s < 300 && ok; ++s) {
        if (c_0(random_polygon(3, 30000 + s)).exact_value != 4) {
            ok = false;
            detail = "triangle seed " + std::to_string(30000 + s);
        }
    }
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-6, 6);
    for (int s = 0; s < 300 && ok; ++s) {
        Rational a(num(rng) + 8), b(num(rng), 3), c(num(rng), 2), d(num(rng) + 8);
        if (a * d == b * c) continue;
        ConvexPolygon pg = apply_motion(unit_square(), LinearMap{a, b, c, d});
        if (c_0(pg).exact_value != 3) {
            ok = false;
            detail = "parallelogram seed index " + std::to_string(s);
        }
    }
    // regular pentagon: the per-vertex formula 2 + 2 max_i A_i / area gives
    // 2 + (8/5) sin^2(pi/5) = 3 - sqrt(5)/5; the commonly quoted
    // 2 + (4/5) sin(pi/5) is an arithmetic slip of the same expression
    const double p5 = 3.0 - std::sqrt(5.0) / 5.0;
    FunctionalValue f5 = c_0(regular_gon(5, 1e-9));
    if (std::fabs(f5.value - p5) >= 1e-6) {
        ok = false;
        detail = "pentagon value " + std::to_string(f5.value);
    }
    int quads = 0;
    for (int s = 0; s < 400 && quads < 200 && ok; ++s) {
        ConvexPolygon q = random_polygon(4, 40000 + s);
        if (q[0] + q[2] == q[1] + q[3]) continue;  // skip exact parallelograms
        ++quads;
        if (!(c_0(q).exact_value > 3)) {
            ok = false;
            detail = "non-parallelogram quad seed " + std::to_string(40000 + s);
        }
    }
    ok = ok && quads >= 200;
    report(3, "point-reflection minima: 4 (triangles), 3 (parallelograms), pentagon formula, "
              "strict >3 otherwise",
           ok, detail);
}

// ---------- criterion 4 -----------------------------------------------------

void criterion4() {
    bool ok = true;
    std::ostringstream detail;
    double f3 = c_1(equilateral(), 1e-9).value;
    double f4 = c_1(unit_square(), 1e-9).value;
    detail << "equilateral " << f3 << ", square " << f4;
    ok = std::fabs(f3 - 4.0) < 1e-5 && std::fabs(f4 - 3.0) < 1e-5;
    int scalene = 0;
    for (int s = 0; s < 200 && ok; ++s) {
        ConvexPolygon t = random_polygon(3, 50000 + s);
        double a = c_1_triangle(t).value;
        double b = c_1(t, 1e-8).value;
        if (std::fabs(a - b) >= 1e-6) {
            ok = false;
            detail << ", cross-oracle gap " << std::fabs(a - b) << " at seed "
                   << (50000 + s);
            break;
        }
        // scalene check: all side lengths pairwise distinct by >= 5%
        auto len = [&](int i, int j) {
            return std::sqrt(to_double(dot(t[i] - t[j], t[i] - t[j])));
        };
        double s01 = len(0, 1), s12 = len(1, 2), s20 = len(2, 0);
        double mx = std::max({s01, s12, s20});
        if (std::fabs(s01 - s12) > 0.05 * mx && std::fabs(s12 - s20) > 0.05 * mx &&
            std::fabs(s20 - s01) > 0.05 * mx) {
            ++scalene;
            if (!(a > 4.0 + 1e-4)) {
                ok = false;
                detail << ", scalene triangle at 4+" << (a - 4.0);
            }
        }
    }
    ok = ok && scalene >= 50;
    report(4, "line-reflection minima: 4 (equilateral), 3 (square); triangle oracle agreement",
           ok, detail.str());
}

// ---------- criterion 5 -----------------------------------------------------

void criterion5() {
    bool ok = true;
    std::ostringstream detail;
    const double disk_target = 1.0 + 4.0 / M_PI;
    ConvexPolygon disk = regular_gon(4096, 1e-9);
    double tr_disk = c_tr(disk).value;
    double c1_disk = c_1(disk, 1e-4, 128).value;
    detail << "disk tr " << tr_disk << ", c1 " << c1_disk;
    ok = std::fabs(tr_disk - disk_target) < 5e-3 && std::fabs(c1_disk - disk_target) < 5e-3;

    nd::BodyN ball = nd::Ball{3, 1.0, {0, 0, 0}};
    double btr = nd::c_tr_nd(ball).value;
    double b0 = nd::c_0_nd(ball).value;
    double bh = nd::c_hyp_nd(ball).value;
    ok = ok && std::fabs(btr - 2.5) < 1e-4 && std::fabs(b0 - 2.5) < 1e-4 &&
         std::fabs(bh - 2.5) < 1e-4;

    double cz = std::cos(0.9), sz = std::sin(0.9);
    nd::BodyN ell = nd::make_ellipsoid({0, 0, 0}, {0.6, 1.2, 1.9},
                                       {{cz, -sz, 0}, {sz, cz, 0}, {0, 0, 1}});
    double etr = nd::c_tr_nd(ell).value;
    detail << "; ball " << btr << "/" << b0 << "/" << bh << ", ellipsoid tr " << etr;
    ok = ok && std::fabs(etr - 2.5) < 1e-4;

    for (nd::BodyN body : {nd::BodyN(cube3()), nd::BodyN(regular_simplex3())}) {
        double vtr = nd::c_tr_nd(body).value;
        double v0 = nd::c_0_nd(body).value;
        double vh = nd::c_hyp_nd(body).value;
        ok = ok && vtr >= 2.6 && v0 >= 2.6 && vh >= 2.6;
        detail << "; " << vtr << "/" << v0 << "/" << vh;
    }
    report(5, "equality cases 1+4/pi (n=2) and 2.5 (n=3); cube and simplex exceed by 0.1", ok,
           detail.str());
}

// ---------- criterion 6 -----------------------------------------------------

void criterion6() {
    bool ok = true;
    std::string detail;
    for (int s = 0; s < 100 && ok; ++s) {
        ConvexPolygon k = difference_body(random_polygon(3 + s % 5, 60000 + s));
        for (int j = 0; j < 10 && ok; ++j) {
            Vec2 dir(r(2 * j + 1 + s % 7, 3), r(((j + s) % 9) - 4, 2));
            if (dir.is_zero()) dir = Vec2(1, 1);
            Vec2 x = scale_to_boundary(k, dir);
            Rational lhs = max_chord_param(k, x) *
                           (support2(k, rot90(x)).value + support2(k, -rot90(x)).value);
            if (lhs != 8 * a_k_area(k, x)) {
                ok = false;
                detail = "chord-width/area identity, seed " + std::to_string(60000 + s);
            }
        }
    }
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<int> num(-9, 9);
    for (int s = 0; s < 500 && ok; ++s) {
        ConvexPolygon p = random_polygon(3 + s % 5, 70000 + s);
        Vec2 v(r(num(rng), 4), r(num(rng), 3));
        if (v.is_zero()) v = Vec2(1, 0);
        Rational t = max_chord_param(p, v);
        Rational lhs = hull_area_union(p, apply_motion(p, Translate{v * t}));
        Rational rhs =
            area2(p) + t * (support2(p, rot90(v)).value + support2(p, -rot90(v)).value);
        if (lhs != rhs) {
            ok = false;
            detail = "planar hull identity, seed " + std::to_string(70000 + s);
        }
    }
    for (int s = 0; s < 5 && ok; ++s) {
        nd::Polytope p = random_polytope3(500 + s);
        auto dirs = nd::sphere_directions(3, 10, 23 + s);
        for (const auto& u : dirs) {
            nd::SupportWidth sw = nd::support_width_nd(p, u);
            auto hi = nd::reflect_points(p.vertices, u, sw.h_plus);
            auto lo = nd::reflect_points(p.vertices, u, -sw.h_minus);
            std::vector<VecN> a = p.vertices, b = p.vertices;
            a.insert(a.end(), hi.begin(), hi.end());
            b.insert(b.end(), lo.begin(), lo.end());
            double lhs = nd::hull_volume(3, a) + nd::hull_volume(3, b);
            double rhs = 2 * p.volume + 2 * sw.width * nd::brightness_nd(p, u);
            if (std::fabs(lhs - rhs) >= 1e-6) {
                ok = false;
                detail = "cylinder identity, polytope seed " + std::to_string(500 + s);
            }
        }
    }
    report(6, "exact identities: chord-width = 8*area, planar hull identity, cylinder identity",
           ok, detail);
}

// ---------- criterion 7 -----------------------------------------------------

void criterion7() {
    std::ostringstream detail;
    nd::CylinderCheck ball = nd::cylinder_check(nd::Ball{3, 1.0, {0, 0, 0}});
    double cube = nd::cylinder_check(cube3()).max_right.value;
    double simp = nd::cylinder_check(regular_simplex3()).max_right.value;
    nd::BodyN ell = nd::make_ellipsoid({0, 0, 0}, {1, 1, 2},
                                       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    double ev = nd::cylinder_check(ell).max_right.value;
    detail << "ball " << ball.max_right.value << ", cube " << cube << ", simplex " << simp
           << ", ellipsoid " << ev;
    bool ok = std::fabs(ball.max_right.value - 1.5) < 1e-6 && cube > 1.5 + 1e-3 &&
              simp > 1.5 + 1e-3 && ev > 1.5 + 1e-3;
    report(7, "circumscribed cylinder ratio: 1.5 for the ball, strictly above otherwise", ok,
           detail.str());
}

// ---------- criterion 8 -----------------------------------------------------

// enumerate Birkhoff incidences from boundary features and check every
// reverse incidence; independent of is_radon's internals
bool brute_force_radon(const UnitBall2& b, int grid, long* pairs) {
    const ConvexPolygon& p = b.polygon();
    const std::size_t n = p.size();
    std::vector<Vec2> dirs;
    for (std::size_t i = 0; i < n; ++i) {
        dirs.push_back(p[i]);
        dirs.push_back(p[i] + p[(i + 1) % n]);
    }
    for (int k = 0; k < grid; ++k) {
        double th = M_PI * (k + 0.41) / grid;
        dirs.emplace_back(snap_to_grid(std::cos(th), 20), snap_to_grid(std::sin(th), 20));
    }
    bool symmetric = true;
    for (const auto& y : dirs) {
        if (y.is_zero()) continue;
        BoundaryFeature f = boundary_feature(p, y);
        std::vector<Vec2> xs;
        if (f.is_vertex) {
            Vec2 ep = p[f.index] - p[(f.index + n - 1) % n];
            Vec2 en = p[(f.index + 1) % n] - p[f.index];
            xs = {ep, en, ep + en};
        } else {
            xs = {p[(f.index + 1) % n] - p[f.index]};
        }
        for (const auto& x : xs) {
            *pairs += 2;
            if (!birkhoff(b, y, x)) symmetric = false;
        }
    }
    return symmetric;
}

void criterion8() {
    bool ok = true;
    std::ostringstream detail;
    long pairs = 0;
    for (int s = 0; s < 25 && ok; ++s) {
        UnitBall2 bh(difference_body(random_polygon(3, 80000 + s)));
        UnitBall2 bo(difference_body(random_polygon(4, 81000 + s)));
        if (is_radon(bh) != brute_force_radon(bh, 100, &pairs)) {
            ok = false;
            detail << "hexagon disagreement at seed " << (80000 + s);
        }
        if (is_radon(bo) != brute_force_radon(bo, 100, &pairs)) {
            ok = false;
            detail << "octagon disagreement at seed " << (81000 + s);
        }
    }
    ok = ok && pairs >= 10000;
    detail << "oracle pairs " << pairs;

    // fine disk polygon: Birkhoff orthogonality is approximately Euclidean,
    // hence approximately symmetric
    ConvexPolygon diskp = regular_gon(4096, 1e-9);
    UnitBall2 disk(diskp);
    for (int k = 0; k < 100 && ok; ++k) {
        double th = M_PI * (k + 0.3) / 100;
        Vec2 y(snap_to_grid(std::cos(th), 30), snap_to_grid(std::sin(th), 30));
        BoundaryFeature f = boundary_feature(diskp, y);
        std::size_t i = f.index;
        Vec2 x = f.is_vertex ? (diskp[i] - diskp[(i + diskp.size() - 1) % diskp.size()]) +
                                   (diskp[(i + 1) % diskp.size()] - diskp[i])
                             : diskp[(i + 1) % diskp.size()] - diskp[i];
        // reverse incidence approximately: the supporting direction at x is
        // within 1e-3 radians of y's direction
        BoundaryFeature fx = boundary_feature(diskp, x);
        std::size_t j = fx.index;
        Vec2 d = diskp[(j + 1) % diskp.size()] - diskp[j];
        double ang = std::fabs(std::remainder(
            std::atan2(to_double(d.y), to_double(d.x)) - std::atan2(to_double(y.y),
                                                                    to_double(y.x)),
            M_PI));
        if (ang > 2e-3) {  // one grid-edge of angular quantization each way
            ok = false;
            detail << ", disk asymmetry " << ang;
        }
    }

    std::vector<Vec2> pts;
    double cx[3] = {0.0, 1.0, 0.5};
    double cy[3] = {0.0, 0.0, std::sqrt(3.0) / 2};
    for (int a = 0; a < 3; ++a) {
        int opp = (a + 2) % 3;
        double base = std::atan2(cy[(a + 1) % 3] - cy[opp], cx[(a + 1) % 3] - cx[opp]);
        double end = std::atan2(cy[a] - cy[opp], cx[a] - cx[opp]);
        double delta = std::remainder(end - base, 2 * M_PI);  // signed 60-degree sweep
        for (int k = 0; k <= 96; ++k) {
            double th = base + delta * k / 96.0;
            pts.emplace_back(snap_to_grid(cx[opp] + std::cos(th), 40),
                             snap_to_grid(cy[opp] + std::sin(th), 40));
        }
    }
    TcvDeviation reuleaux = tcv_deviation(hull2(pts), 256);
    detail << ", Reuleaux tcv ratio " << reuleaux.ratio;
    ok = ok && reuleaux.ratio <= 1.001;
    report(8, "orthogonality symmetry oracle agreement; disk approximate symmetry; "
              "constant-width profile",
           ok, detail.str());
}

// ---------- criterion 9 -----------------------------------------------------

void criterion9() {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(909);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int s = 0; s < 100 && ok; ++s) {
        ConvexPolygon p = random_polygon(3 + s % 5, 90000 + s);
        Vec2 axis(r(num(rng), 2), r(num(rng), 3));
        if (axis.is_zero()) axis = Vec2(2, 1);
        ConvexPolygon q = steiner2(p, axis);
        if (area2(q) != area2(p) || c_tr(q).exact_value > c_tr(p).exact_value) {
            ok = false;
            detail = "seed " + std::to_string(90000 + s);
        }
    }
    report(9, "symmetrization preserves area exactly and never increases the translate "
              "functional",
           ok, detail);
}

// ---------- criterion 10 ----------------------------------------------------

void criterion10() {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(1010);
    std::uniform_int_distribution<int> num(-8, 8);
    for (int s = 0; s < 500 && ok; ++s) {
        ConvexPolygon p = random_polygon(3 + s % 5, 100000 + s);
        Vec2 v1(r(num(rng), 3), r(num(rng), 4));
        Vec2 v2(r(num(rng), 5), r(num(rng), 2));
        Rational a1 = hull_area_union(p, apply_motion(p, Translate{v1}));
        Rational a2 = hull_area_union(p, apply_motion(p, Translate{v2}));
        Rational am = hull_area_union(p, apply_motion(p, Translate{(v1 + v2) * r(1, 2)}));
        if (am > (a1 + a2) / 2) {
            ok = false;
            detail = "seed " + std::to_string(100000 + s);
        }
    }
    report(10, "midpoint convexity of the translate hull area, exact, 500 instances", ok,
           detail);
}

// ---------- criterion 11 ----------------------------------------------------

struct FloatDiffBody {
    std::vector<std::pair<double, double>> v;  // difference body vertices, CCW

    explicit FloatDiffBody(const ConvexPolygon& d) {
        for (const auto& p : d.vertices()) v.emplace_back(to_double(p.x), to_double(p.y));
    }

    // radial extent along (c, s) times the raw support at the perpendicular
    double profile(double c, double s) const {
        double radial = 1e300;
        const std::size_t n = v.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& [x0, y0] = v[i];
            const auto& [x1, y1] = v[(i + 1) % n];
            double nx = y1 - y0, ny = -(x1 - x0);
            double den = nx * c + ny * s;
            if (den > 1e-15) radial = std::min(radial, (nx * x0 + ny * y0) / den);
        }
        double support = -1e300;
        for (const auto& [x, y] : v) support = std::max(support, -s * x + c * y);
        return radial * support;
    }
};

void criterion11() {
    bool ok = true;
    std::ostringstream detail;
    for (int s = 0; s < 100 && ok; ++s) {
        ConvexPolygon p = random_polygon(3 + s % 6, 110000 + s);
        FunctionalValue f = c_tr(p);
        ConvexPolygon d = difference_body(p);
        FloatDiffBody fd(d);
        double area = to_double(area2(p));
        double dense = -1e300;
        for (int k = 0; k < 100000; ++k) {
            double th = M_PI * k / 100000.0;
            dense = std::max(dense, fd.profile(std::cos(th), std::sin(th)));
        }
        dense = 1.0 + dense / area;
        const auto& dir = std::get<Direction>(f.maximizer);
        double dx = to_double(dir.x()), dy = to_double(dir.y());
        double nl = std::hypot(dx, dy);
        double at_max = 1.0 + fd.profile(dx / nl, dy / nl) / area;
        // the exact maximum dominates dense sampling; dense sampling comes
        // within discretization reach; the float re-evaluation at the exact
        // maximizer agrees to rounding
        if (!(f.value >= dense - 1e-10 && dense >= f.value - 1e-4 &&
              std::fabs(at_max - f.value) < 1e-10)) {
            ok = false;
            detail << "tr oracle gap at seed " << (110000 + s) << ": exact " << f.value
                   << ", dense " << dense << ", re-eval " << at_max;
        }
    }

    // Monte-Carlo shadow oracle for the brightness of each body kind
    auto mc_check = [&](const nd::BodyN& b, const VecN& u, std::uint64_t seed,
                        const char* label) {
        const int n = nd::body_dim(b);
        // orthonormal basis of u-perp
        std::vector<VecN> basis = {u};
        for (int i = 0; i < n && static_cast<int>(basis.size()) < n; ++i) {
            VecN e(n, 0.0);
            e[i] = 1.0;
            for (const auto& bb : basis) {
                double dd = 0;
                for (int k = 0; k < n; ++k) dd += e[k] * bb[k];
                for (int k = 0; k < n; ++k) e[k] -= dd * bb[k];
            }
            double len = 0;
            for (double c : e) len += c * c;
            if (len > 1e-12) {
                for (double& c : e) c /= std::sqrt(len);
                basis.push_back(e);
            }
        }
        basis.erase(basis.begin());
        double R = 0;
        for (const auto& e : basis) {
            nd::SupportWidth sw = nd::support_width_nd(b, e);
            R = std::max({R, std::fabs(sw.h_plus), std::fabs(sw.h_minus)});
        }
        R = R * std::sqrt(2.0) + 0.01;
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> uni(-R, R);
        const int N = 1000000;
        long hits = 0;
        for (int sample = 0; sample < N; ++sample) {
            VecN pt(n, 0.0);
            for (const auto& e : basis) {
                double c = uni(rng);
                for (int k = 0; k < n; ++k) pt[k] += c * e[k];
            }
            // does the line pt + t u meet the body?
            bool hit = false;
            if (const auto* poly = std::get_if<nd::Polytope>(&b)) {
                double lo = -1e30, hi = 1e30;
                hit = true;
                for (const auto& fct : poly->facets) {
                    double nu = 0, np = 0;
                    for (int k = 0; k < n; ++k) {
                        nu += fct.normal[k] * u[k];
                        np += fct.normal[k] * pt[k];
                    }
                    if (std::fabs(nu) < 1e-13) {
                        if (np > fct.offset + 1e-12) {
                            hit = false;
                            break;
                        }
                    } else if (nu > 0) {
                        hi = std::min(hi, (fct.offset - np) / nu);
                    } else {
                        lo = std::max(lo, (fct.offset - np) / nu);
                    }
                }
                hit = hit && lo <= hi + 1e-12;
            } else if (const auto* ball = std::get_if<nd::Ball>(&b)) {
                double c2 = 0, du = 0;
                for (int k = 0; k < n; ++k) {
                    double dd = pt[k] - ball->center[k];
                    c2 += dd * dd;
                    du += dd * u[k];
                }
                hit = c2 - du * du <= ball->radius * ball->radius + 1e-12;
            } else {
                const auto& e = std::get<nd::Ellipsoid>(b);
                VecN pl(n, 0.0), ul(n, 0.0);
                for (int i = 0; i < n; ++i) {
                    double dp = 0, du = 0;
                    for (int k = 0; k < n; ++k) {
                        dp += e.orientation[k][i] * (pt[k] - e.center[k]);
                        du += e.orientation[k][i] * u[k];
                    }
                    pl[i] = dp / e.semiaxes[i];
                    ul[i] = du / e.semiaxes[i];
                }
                double a = 0, bq = 0, c = -1;
                for (int i = 0; i < n; ++i) {
                    a += ul[i] * ul[i];
                    bq += 2 * pl[i] * ul[i];
                    c += pl[i] * pl[i];
                }
                hit = bq * bq - 4 * a * c >= -1e-12;
            }
            if (hit) ++hits;
        }
        double box = std::pow(2 * R, n - 1);
        double frac = double(hits) / N;
        double mc = box * frac;
        double err = box * std::sqrt(std::max(frac * (1 - frac), 1e-12) / N);
        double exact = nd::brightness_nd(b, u);
        if (std::fabs(mc - exact) > 3 * err) {
            ok = false;
            detail << "; brightness MC gap on " << label << ": " << mc << " vs " << exact
                   << " (3 sigma " << 3 * err << ")";
        }
    };

    double cz = std::cos(0.6), sz = std::sin(0.6);
    mc_check(cube3(), unit({1, 1, 1}), 1111, "cube");
    mc_check(nd::Ball{3, 1.2, {0.3, -0.2, 0.1}}, unit({2, -1, 1}), 2222, "ball");
    mc_check(nd::make_ellipsoid({0, 0, 0}, {0.8, 1.4, 2.0},
                                {{cz, -sz, 0}, {sz, cz, 0}, {0, 0, 1}}),
             unit({1, 2, 1}), 3333, "ellipsoid");

    report(11, "maximum matches dense direction sampling; brightness matches Monte-Carlo "
               "shadows",
           ok, detail.str());
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    auto dt = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("%d of 11 criteria passed (%llds)\n", 11 - g_failures,
                static_cast<long long>(dt));
    return g_failures == 0 ? 0 : 1;
}
