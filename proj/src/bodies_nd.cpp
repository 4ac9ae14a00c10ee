#include "hullvol/bodies_nd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "hullvol/errors.hpp"

namespace hullvol::nd {

namespace {

double dot_nd(const VecN& a, const VecN& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm_nd(const VecN& a) { return std::sqrt(dot_nd(a, a)); }

VecN unit_nd(VecN a) {
    double n = norm_nd(a);
    if (n < 1e-300) throw ZeroDirection();
    for (auto& c : a) c /= n;
    return a;
}

// component of u along axis i of the ellipsoid (column i of orientation)
double axis_component(const Ellipsoid& e, const VecN& u, int i) {
    double s = 0;
    for (int j = 0; j < e.dim; ++j) s += e.orientation[j][i] * u[j];
    return s;
}

double quad_m(const Ellipsoid& e, const VecN& u) {  // u^T M u
    double s = 0;
    for (int i = 0; i < e.dim; ++i) {
        double c = axis_component(e, u, i) * e.semiaxes[i];
        s += c * c;
    }
    return s;
}

double quad_minv(const Ellipsoid& e, const VecN& u) {  // u^T M^-1 u
    double s = 0;
    for (int i = 0; i < e.dim; ++i) {
        double c = axis_component(e, u, i) / e.semiaxes[i];
        s += c * c;
    }
    return s;
}

// radial function of the hull at a direction from its interior origin shift
double radial_at(const HullResult& h, const VecN& u) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : h.facets) {
        double denom = dot_nd(f.normal, u);
        if (denom > 1e-15) best = std::min(best, f.offset / denom);
    }
    if (!std::isfinite(best)) throw GeometryError("radial ray-shoot found no facet");
    return best;
}

struct Optimizer {
    int dim;
    int evals = 0;

    template <typename F>
    DirOptResult run(const F& objective, const DirOptions& opts, bool minimize) {
        int coarse = opts.coarse_samples > 0 ? opts.coarse_samples : 1000 * (dim - 1);
        auto dirs = sphere_directions(dim, coarse, opts.seed);
        double sgn = minimize ? -1.0 : 1.0;
        std::vector<std::pair<double, int>> scored;
        scored.reserve(dirs.size());
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            scored.emplace_back(sgn * objective(dirs[i]), static_cast<int>(i));
            ++evals;
        }
        std::size_t keep = std::min<std::size_t>(16, scored.size());
        std::partial_sort(scored.begin(), scored.begin() + keep, scored.end(),
                          [](const auto& a, const auto& b) { return a.first > b.first; });

        double best_val = scored[0].first;
        VecN best_dir = dirs[scored[0].second];
        for (std::size_t c = 0; c < keep; ++c) {
            VecN u = dirs[scored[c].second];
            double val = scored[c].first;
            double step = 0.1;
            for (int it = 0; it < opts.refine_iters && step > opts.tol; ++it) {
                bool improved = false;
                auto basis = tangent_basis(u);
                for (const auto& t : basis) {
                    for (double s : {step, -step}) {
                        VecN cand(dim);
                        for (int k = 0; k < dim; ++k) cand[k] = u[k] + s * t[k];
                        cand = unit_nd(cand);
                        double v = sgn * objective(cand);
                        ++evals;
                        if (v > val) {
                            val = v;
                            u = std::move(cand);
                            improved = true;
                        }
                    }
                }
                if (!improved) step *= 0.5;
            }
            if (val > best_val || (val == best_val && u < best_dir)) {
                best_val = val;
                best_dir = u;
            }
        }
        return {sgn * best_val, best_dir, evals, true};
    }

    std::vector<VecN> tangent_basis(const VecN& u) const {
        std::vector<VecN> basis;
        for (int j = 0; j < dim && static_cast<int>(basis.size()) < dim - 1; ++j) {
            VecN v(dim, 0.0);
            v[j] = 1.0;
            double p = dot_nd(v, u);
            for (int k = 0; k < dim; ++k) v[k] -= p * u[k];
            for (const auto& b : basis) {
                double q = dot_nd(v, b);
                for (int k = 0; k < dim; ++k) v[k] -= q * b[k];
            }
            double n = norm_nd(v);
            if (n > 1e-8) {
                for (auto& c : v) c /= n;
                basis.push_back(std::move(v));
            }
        }
        return basis;
    }
};

HullResult difference_hull(const Polytope& p) {
    std::vector<VecN> diffs;
    diffs.reserve(p.vertices.size() * p.vertices.size());
    for (const auto& a : p.vertices)
        for (const auto& b : p.vertices) {
            VecN d(p.dim);
            for (int k = 0; k < p.dim; ++k) d[k] = a[k] - b[k];
            diffs.push_back(std::move(d));
        }
    return hull_nd(p.dim, std::move(diffs));
}

Polytope polytope_from_ellipsoid(const Ellipsoid& e, int count, std::uint64_t seed) {
    auto dirs = sphere_directions(e.dim, count, seed);
    std::vector<VecN> pts;
    pts.reserve(dirs.size());
    for (const auto& u : dirs) {
        VecN p = e.center;
        for (int i = 0; i < e.dim; ++i) {
            double c = axis_component(e, u, i) * e.semiaxes[i];
            for (int j = 0; j < e.dim; ++j) p[j] += c * e.semiaxes[i] * e.orientation[j][i];
        }
        // p = center + M u scaled onto the boundary
        double scale = std::sqrt(quad_m(e, u));
        for (int j = 0; j < e.dim; ++j)
            p[j] = e.center[j] + (p[j] - e.center[j]) / scale;
        pts.push_back(std::move(p));
    }
    return make_polytope(e.dim, std::move(pts));
}

double hull_ratio_with(const Polytope& p, const std::vector<VecN>& extra) {
    std::vector<VecN> pts = p.vertices;
    pts.insert(pts.end(), extra.begin(), extra.end());
    return hull_volume(p.dim, std::move(pts)) / p.volume;
}

}  // namespace

Polytope make_polytope(int dim, std::vector<VecN> points) {
    HullResult h = hull_nd(dim, std::move(points));
    // keep only points that appear on some facet (the extreme points)
    std::vector<char> used(h.points.size(), 0);
    for (const auto& f : h.facets)
        for (int v : f.vertices) used[v] = 1;
    std::vector<int> remap(h.points.size(), -1);
    std::vector<VecN> verts;
    for (std::size_t i = 0; i < h.points.size(); ++i)
        if (used[i]) {
            remap[i] = static_cast<int>(verts.size());
            verts.push_back(h.points[i]);
        }
    for (auto& f : h.facets)
        for (int& v : f.vertices) v = remap[v];
    return {dim, std::move(verts), std::move(h.facets), h.volume, h.interior};
}

Ellipsoid make_ellipsoid(VecN center, VecN semiaxes, std::vector<VecN> orientation) {
    const int n = static_cast<int>(center.size());
    if (n < 2 || n > 6) throw UnsupportedBody("ellipsoid dimension out of range");
    if (static_cast<int>(semiaxes.size()) != n ||
        static_cast<int>(orientation.size()) != n)
        throw DegenerateBody("ellipsoid field sizes disagree");
    for (double a : semiaxes)
        if (!(a > 0)) throw DegenerateBody("semiaxes must be positive");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(orientation[i].size()) != n)
            throw DegenerateBody("orientation is not square");
        for (int j = 0; j < n; ++j) {
            double s = dot_nd(orientation[i], orientation[j]);
            if (std::fabs(s - (i == j ? 1.0 : 0.0)) > 1e-12)
                throw DegenerateBody("orientation is not orthogonal");
        }
    }
    return {n, std::move(center), std::move(semiaxes), std::move(orientation)};
}

double v_ball(int n) {
    if (n < 1) throw UnsupportedBody("v_ball needs n >= 1");
    return std::pow(M_PI, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

int body_dim(const BodyN& b) {
    return std::visit([](const auto& x) { return x.dim; }, b);
}

double volume_nd(const BodyN& b) {
    if (const auto* p = std::get_if<Polytope>(&b)) return p->volume;
    if (const auto* e = std::get_if<Ellipsoid>(&b)) {
        double v = v_ball(e->dim);
        for (double a : e->semiaxes) v *= a;
        return v;
    }
    const auto& ball = std::get<Ball>(b);
    return v_ball(ball.dim) * std::pow(ball.radius, ball.dim);
}

SupportWidth support_width_nd(const BodyN& b, VecN u) {
    u = unit_nd(std::move(u));
    if (const auto* p = std::get_if<Polytope>(&b)) {
        double hp = -std::numeric_limits<double>::infinity();
        double hm = -std::numeric_limits<double>::infinity();
        for (const auto& v : p->vertices) {
            double s = dot_nd(v, u);
            hp = std::max(hp, s);
            hm = std::max(hm, -s);
        }
        return {hp, hm, hp + hm};
    }
    if (const auto* e = std::get_if<Ellipsoid>(&b)) {
        double c = dot_nd(e->center, u);
        double r = std::sqrt(quad_m(*e, u));
        return {c + r, r - c, 2 * r};
    }
    const auto& ball = std::get<Ball>(b);
    double c = dot_nd(ball.center, u);
    return {c + ball.radius, ball.radius - c, 2 * ball.radius};
}

double chord_nd(const BodyN& b, VecN u) {
    u = unit_nd(std::move(u));
    if (const auto* p = std::get_if<Polytope>(&b)) {
        HullResult d = difference_hull(*p);
        return radial_at(d, u);
    }
    if (const auto* e = std::get_if<Ellipsoid>(&b)) return 2.0 / std::sqrt(quad_minv(*e, u));
    return 2.0 * std::get<Ball>(b).radius;
}

double brightness_nd(const BodyN& b, VecN u) {
    u = unit_nd(std::move(u));
    if (const auto* p = std::get_if<Polytope>(&b)) {
        double s = 0;
        for (const auto& f : p->facets) s += std::fabs(dot_nd(u, f.normal)) * f.measure;
        return 0.5 * s;
    }
    if (const auto* e = std::get_if<Ellipsoid>(&b)) {
        double det_sqrt = 1.0;
        for (double a : e->semiaxes) det_sqrt *= a;
        return v_ball(e->dim - 1) * det_sqrt * std::sqrt(quad_minv(*e, u));
    }
    const auto& ball = std::get<Ball>(b);
    return v_ball(ball.dim - 1) * std::pow(ball.radius, ball.dim - 1);
}

std::vector<VecN> sphere_directions(int dim, int count, std::uint64_t seed) {
    std::vector<VecN> out;
    out.reserve(count);
    if (dim == 2) {
        for (int i = 0; i < count; ++i) {
            double t = 2 * M_PI * i / count;
            out.push_back({std::cos(t), std::sin(t)});
        }
        return out;
    }
    if (dim == 3) {
        const double ga = M_PI * (3.0 - std::sqrt(5.0));
        for (int i = 0; i < count; ++i) {
            double z = 1.0 - 2.0 * (i + 0.5) / count;
            double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            out.push_back({r * std::cos(ga * i), r * std::sin(ga * i), z});
        }
        return out;
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (static_cast<int>(out.size()) < count) {
        VecN v(dim);
        for (auto& c : v) c = gauss(rng);
        double n = norm_nd(v);
        if (n < 1e-8) continue;
        for (auto& c : v) c /= n;
        out.push_back(std::move(v));
    }
    return out;
}

DirOptResult c_tr_nd(const BodyN& b, const DirOptions& opts) {
    const int dim = body_dim(b);
    const double vol = volume_nd(b);
    if (const auto* p = std::get_if<Polytope>(&b)) {
        HullResult diff = difference_hull(*p);
        Optimizer opt{dim};
        auto res = opt.run(
            [&](const VecN& u) { return radial_at(diff, u) * brightness_nd(b, u); }, opts,
            false);
        res.value = 1.0 + res.value / vol;
        return res;
    }
    Optimizer opt{dim};
    auto res = opt.run([&](const VecN& u) { return chord_nd(b, u) * brightness_nd(b, u); },
                       opts, false);
    res.value = 1.0 + res.value / vol;
    return res;
}

std::vector<VecN> reflect_points(const std::vector<VecN>& pts, const VecN& u, double t) {
    std::vector<VecN> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        double d = t - dot_nd(p, u);
        VecN q(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) q[k] = p[k] + 2 * d * u[k];
        out.push_back(std::move(q));
    }
    return out;
}

DirOptResult c_hyp_nd(const BodyN& b, const DirOptions& opts) {
    const int dim = body_dim(b);
    if (const auto* ball = std::get_if<Ball>(&b)) {
        VecN e1(dim, 0.0);
        e1[0] = 1.0;
        (void)ball;
        return {1.0 + 2.0 * v_ball(dim - 1) / v_ball(dim), e1, 0, false};
    }
    if (const auto* e = std::get_if<Ellipsoid>(&b)) {
        bool spherical = true;
        for (double a : e->semiaxes) spherical &= std::fabs(a - e->semiaxes[0]) < 1e-12;
        if (spherical) return c_hyp_nd(Ball{dim, e->semiaxes[0], e->center}, opts);
        Polytope approx = polytope_from_ellipsoid(*e, dim == 3 ? 512 : 256, opts.seed);
        return c_hyp_nd(approx, opts);
    }
    const auto& p = std::get<Polytope>(b);
    Optimizer opt{dim};
    return opt.run(
        [&](const VecN& u) {
            double h = support_width_nd(b, u).h_plus;
            return hull_ratio_with(p, reflect_points(p.vertices, u, h));
        },
        opts, false);
}

DirOptResult c_0_nd(const BodyN& b, const DirOptions& opts) {
    const int dim = body_dim(b);
    if (const auto* ball = std::get_if<Ball>(&b)) {
        VecN e1(dim, 0.0);
        e1[0] = 1.0;
        (void)ball;
        return {1.0 + 2.0 * v_ball(dim - 1) / v_ball(dim), e1, 0, false};
    }
    const auto* p = std::get_if<Polytope>(&b);
    if (!p) throw UnsupportedBody("c_0 supports polytopes and balls");
    (void)opts;
    double best = -1;
    VecN best_dir(dim, 0.0);
    for (const auto& x : p->vertices) {
        std::vector<VecN> refl;
        refl.reserve(p->vertices.size());
        for (const auto& v : p->vertices) {
            VecN q(dim);
            for (int k = 0; k < dim; ++k) q[k] = 2 * x[k] - v[k];
            refl.push_back(std::move(q));
        }
        double ratio = hull_ratio_with(*p, refl);
        if (ratio > best) {
            best = ratio;
            VecN d(dim);
            for (int k = 0; k < dim; ++k) d[k] = x[k] - p->interior[k];
            best_dir = unit_nd(std::move(d));
        }
    }
    return {best, best_dir, static_cast<int>(p->vertices.size()), false};
}

CylinderCheck cylinder_check(const BodyN& b, const DirOptions& opts) {
    const int dim = body_dim(b);
    const double vol = volume_nd(b);
    auto objective = [&](const VecN& u) {
        return support_width_nd(b, u).width * brightness_nd(b, u) / vol;
    };
    Optimizer opt_max{dim};
    Optimizer opt_min{dim};
    return {opt_max.run(objective, opts, false), opt_min.run(objective, opts, true)};
}

DirOptResult c_hyp_validation(const BodyN& b, const DirOptions& opts) {
    const auto* p = std::get_if<Polytope>(&b);
    if (!p) throw UnsupportedBody("validation mode needs a polytope");
    const int dim = p->dim;
    int coarse = opts.coarse_samples > 0 ? opts.coarse_samples : 200;
    auto dirs = sphere_directions(dim, coarse, opts.seed);
    double best = -1;
    VecN best_dir(dim, 0.0);
    int used = 0;
    for (const auto& u : dirs) {
        auto sw = support_width_nd(b, u);
        for (int j = 1; j <= 8; ++j) {  // hyperplanes strictly inside the slab
            double t = sw.h_plus - sw.width * j / 9.0;
            double ratio = hull_ratio_with(*p, reflect_points(p->vertices, u, t));
            ++used;
            if (ratio > best) {
                best = ratio;
                best_dir = u;
            }
        }
    }
    return {best, best_dir, used, false};
}

DirOptResult c_0_validation(const BodyN& b, const DirOptions& opts) {
    const auto* p = std::get_if<Polytope>(&b);
    if (!p) throw UnsupportedBody("validation mode needs a polytope");
    const int dim = p->dim;
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int samples = opts.coarse_samples > 0 ? opts.coarse_samples : 200;
    double best = -1;
    VecN best_dir(dim, 0.0);
    for (int s = 0; s < samples; ++s) {
        // random convex combination of vertices: an interior (or boundary) x
        VecN x(dim, 0.0);
        double wsum = 0;
        std::vector<double> w(p->vertices.size());
        for (auto& c : w) {
            c = unif(rng);
            wsum += c;
        }
        for (std::size_t i = 0; i < p->vertices.size(); ++i)
            for (int k = 0; k < dim; ++k) x[k] += w[i] / wsum * p->vertices[i][k];
        std::vector<VecN> refl;
        refl.reserve(p->vertices.size());
        for (const auto& v : p->vertices) {
            VecN q(dim);
            for (int k = 0; k < dim; ++k) q[k] = 2 * x[k] - v[k];
            refl.push_back(std::move(q));
        }
        double ratio = hull_ratio_with(*p, refl);
        if (ratio > best) {
            best = ratio;
            VecN d(dim);
            for (int k = 0; k < dim; ++k) d[k] = x[k] - p->interior[k];
            double n = norm_nd(d);
            best_dir = n > 1e-12 ? unit_nd(std::move(d)) : VecN(dim, 0.0);
        }
    }
    return {best, best_dir, samples, false};
}

}  // namespace hullvol::nd
