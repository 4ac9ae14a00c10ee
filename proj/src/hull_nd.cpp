#include "hullvol/hull_nd.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "hullvol/errors.hpp"
#include "hullvol/rational.hpp"

namespace hullvol::nd {

namespace {

double det_double(std::vector<VecN> m) {
    const std::size_t n = m.size();
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
        if (m[piv][c] == 0.0) return 0.0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            double f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

int sign_exact(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (m[c][c] < 0) sign = -sign;
    }
    return sign;
}

// sign of det of rows (p[i] - base) for i in idx, plus (q - base)
int orient_exact(const std::vector<VecN>& pts, const std::vector<int>& facet, const VecN& q) {
    const std::size_t d = q.size();
    std::vector<std::vector<Rational>> m;
    m.reserve(d);
    const VecN& base = pts[facet[0]];
    for (std::size_t i = 1; i < facet.size(); ++i) {
        std::vector<Rational> row(d);
        for (std::size_t k = 0; k < d; ++k)
            row[k] = rational_from_double(pts[facet[i]][k]) - rational_from_double(base[k]);
        m.push_back(std::move(row));
    }
    std::vector<Rational> row(d);
    for (std::size_t k = 0; k < d; ++k)
        row[k] = rational_from_double(q[k]) - rational_from_double(base[k]);
    m.push_back(std::move(row));
    return sign_exact(std::move(m));
}

double dot_nd(const VecN& a, const VecN& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// generalized cross product: vector orthogonal to the facet's edge span
VecN facet_direction(const std::vector<VecN>& pts, const std::vector<int>& facet, int dim) {
    std::vector<VecN> edges;
    for (std::size_t i = 1; i < facet.size(); ++i) {
        VecN e(dim);
        for (int k = 0; k < dim; ++k) e[k] = pts[facet[i]][k] - pts[facet[0]][k];
        edges.push_back(std::move(e));
    }
    VecN n(dim);
    for (int j = 0; j < dim; ++j) {
        std::vector<VecN> minor;
        for (const auto& e : edges) {
            VecN row;
            for (int k = 0; k < dim; ++k)
                if (k != j) row.push_back(e[k]);
            minor.push_back(std::move(row));
        }
        n[j] = ((j % 2 == 0) ? 1.0 : -1.0) * det_double(std::move(minor));
    }
    return n;
}

double gram_measure(const std::vector<VecN>& pts, const std::vector<int>& facet, int dim) {
    std::vector<VecN> edges;
    for (std::size_t i = 1; i < facet.size(); ++i) {
        VecN e(dim);
        for (int k = 0; k < dim; ++k) e[k] = pts[facet[i]][k] - pts[facet[0]][k];
        edges.push_back(std::move(e));
    }
    const std::size_t m = edges.size();
    std::vector<VecN> gram(m, VecN(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) gram[i][j] = dot_nd(edges[i], edges[j]);
    double g = det_double(std::move(gram));
    double fact = 1.0;
    for (std::size_t i = 2; i <= m; ++i) fact *= static_cast<double>(i);
    return std::sqrt(std::max(0.0, g)) / fact;
}

struct WorkFacet {
    std::vector<int> vertices;
    VecN normal;  // outward, unit
    double offset;
    bool alive = true;
};

WorkFacet build_facet(const std::vector<VecN>& pts, std::vector<int> verts, const VecN& interior,
                      int dim, double scale) {
    WorkFacet f;
    f.vertices = std::move(verts);
    VecN n = facet_direction(pts, f.vertices, dim);
    double norm = std::sqrt(dot_nd(n, n));
    if (norm < 1e-14 * std::pow(scale, dim - 1)) {
        // degenerate simplex; resolve exactly (all-zero normal means the
        // facet vertices are affinely dependent)
        throw DegenerateBody("degenerate facet encountered");
    }
    for (auto& c : n) c /= norm;
    double off = dot_nd(n, pts[f.vertices[0]]);
    double side = dot_nd(n, interior) - off;
    if (std::fabs(side) <= 1e-12 * scale) {
        int s = orient_exact(pts, f.vertices, interior);
        if (s == 0) throw DegenerateBody("interior point on facet plane");
        side = s;
        // orient_exact uses vertex order, not n; recompute the float side
        // sign from it: positive det side corresponds to +n or -n
        // depending on vertex parity, so fall back to comparing with the
        // projection sign of the exact test direction.
        // Simplest consistent resolution: flip n when the exact sign of
        // (interior above plane in n direction) is positive.
        // The float dot may be ~0 but the exact sign of
        // dot(n_exactish, interior - v0) is what we need; approximate n is
        // adequate because the plane itself is exact in the vertices.
        side = dot_nd(n, interior) - off;
        if (side == 0.0) side = s;  // tie-break; should not occur
    }
    if (side > 0) {
        for (auto& c : n) c = -c;
        off = -off;
    }
    f.normal = std::move(n);
    f.offset = off;
    return f;
}

}  // namespace

HullResult hull_nd(int dim, std::vector<VecN> points) {
    if (dim < 2 || dim > 6) throw UnsupportedBody("hull_nd supports 2 <= dim <= 6");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim) throw DegenerateBody("point dimension mismatch");
    double scale = 1e-30;
    for (const auto& p : points)
        for (double c : p) scale = std::max(scale, std::fabs(c));

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    {
        // merge near-coincident points; reflections across supporting
        // hyperplanes reproduce touching vertices up to rounding
        const double eps_pt = 1e-10 * scale;
        std::vector<VecN> kept;
        kept.reserve(points.size());
        for (const auto& p : points) {
            bool dup = false;
            for (auto it = kept.rbegin();
                 it != kept.rend() && p[0] - (*it)[0] <= eps_pt; ++it) {
                double d2 = 0;
                for (int k = 0; k < dim; ++k) d2 += (p[k] - (*it)[k]) * (p[k] - (*it)[k]);
                if (d2 <= eps_pt * eps_pt) {
                    dup = true;
                    break;
                }
            }
            if (!dup) kept.push_back(p);
        }
        points = std::move(kept);
    }
    if (points.size() < static_cast<std::size_t>(dim + 1))
        throw DegenerateBody("too few distinct points");

    // initial full-dimensional simplex by greedy residual maximization
    std::vector<int> simplex{0};
    std::vector<VecN> basis;  // orthonormalized directions from points[0]
    for (int step = 0; step < dim; ++step) {
        int best = -1;
        double best_res = 0;
        VecN best_vec;
        for (std::size_t i = 0; i < points.size(); ++i) {
            VecN v(dim);
            for (int k = 0; k < dim; ++k) v[k] = points[i][k] - points[simplex[0]][k];
            for (const auto& b : basis) {
                double proj = dot_nd(v, b);
                for (int k = 0; k < dim; ++k) v[k] -= proj * b[k];
            }
            double res = std::sqrt(dot_nd(v, v));
            if (res > best_res) {
                best_res = res;
                best = static_cast<int>(i);
                best_vec = std::move(v);
            }
        }
        if (best < 0 || best_res < 1e-9 * scale)
            throw DegenerateBody("point set is not full-dimensional");
        for (auto& c : best_vec) c /= best_res;
        basis.push_back(std::move(best_vec));
        simplex.push_back(best);
    }

    VecN interior(dim, 0.0);
    for (int idx : simplex)
        for (int k = 0; k < dim; ++k) interior[k] += points[idx][k] / (dim + 1);

    std::vector<WorkFacet> facets;
    for (int drop = 0; drop <= dim; ++drop) {
        std::vector<int> verts;
        for (int i = 0; i <= dim; ++i)
            if (i != drop) verts.push_back(simplex[i]);
        facets.push_back(build_facet(points, std::move(verts), interior, dim, scale));
    }

    // insert remaining points, farthest from the interior first
    std::vector<int> order;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (std::find(simplex.begin(), simplex.end(), static_cast<int>(i)) == simplex.end())
            order.push_back(static_cast<int>(i));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double da = 0, db = 0;
        for (int k = 0; k < dim; ++k) {
            da += (points[a][k] - interior[k]) * (points[a][k] - interior[k]);
            db += (points[b][k] - interior[k]) * (points[b][k] - interior[k]);
        }
        return da > db;
    });

    const double eps = 1e-11 * scale;
    auto visible_from = [&](const WorkFacet& f, const VecN& q) {
        double sd = dot_nd(f.normal, q) - f.offset;
        if (sd > eps) return true;
        if (sd < -eps) return false;
        int sq = orient_exact(points, f.vertices, q);
        if (sq == 0) return true;  // on the plane: keep, never drop coplanar vertices
        int si = orient_exact(points, f.vertices, interior);
        return sq == -si;  // strictly opposite side from the interior
    };

    for (int qi : order) {
        const VecN& q = points[qi];
        std::vector<std::size_t> vis;
        for (std::size_t fi = 0; fi < facets.size(); ++fi)
            if (facets[fi].alive && visible_from(facets[fi], q)) vis.push_back(fi);
        if (vis.empty()) continue;

        std::map<std::vector<int>, int> ridge_count;
        for (std::size_t fi : vis) {
            const auto& verts = facets[fi].vertices;
            for (std::size_t drop = 0; drop < verts.size(); ++drop) {
                std::vector<int> ridge;
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (i != drop) ridge.push_back(verts[i]);
                std::sort(ridge.begin(), ridge.end());
                ++ridge_count[ridge];
            }
        }
        std::vector<WorkFacet> fresh;
        for (const auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;  // interior ridge of the visible region
            std::vector<int> verts = ridge;
            verts.push_back(qi);
            fresh.push_back(build_facet(points, std::move(verts), interior, dim, scale));
        }
        for (std::size_t fi : vis) facets[fi].alive = false;
        for (auto& f : fresh) facets.push_back(std::move(f));
    }

    HullResult result;
    result.dim = dim;
    result.points = points;
    result.interior = interior;
    result.volume = 0.0;
    double dfact = 1.0;
    for (int i = 2; i <= dim; ++i) dfact *= i;
    for (auto& wf : facets) {
        if (!wf.alive) continue;
        std::vector<VecN> rows;
        for (int vi : wf.vertices) {
            VecN row(dim);
            for (int k = 0; k < dim; ++k) row[k] = points[vi][k] - interior[k];
            rows.push_back(std::move(row));
        }
        result.volume += std::fabs(det_double(std::move(rows))) / dfact;
        Facet f;
        f.vertices = wf.vertices;
        f.normal = wf.normal;
        f.offset = wf.offset;
        f.measure = gram_measure(points, wf.vertices, dim);
        result.facets.push_back(std::move(f));
    }
    if (result.facets.empty()) throw DegenerateBody("empty hull");
    return result;
}

double hull_volume(int dim, std::vector<VecN> points) {
    if (dim == 2) {
        // monotone chain, float arithmetic
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        const std::size_t n = points.size();
        if (n < 3) return 0.0;
        std::vector<VecN> h(2 * n);
        std::size_t k = 0;
        auto cr = [](const VecN& o, const VecN& a, const VecN& b) {
            return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
        };
        for (std::size_t i = 0; i < n; ++i) {
            while (k >= 2 && cr(h[k - 2], h[k - 1], points[i]) <= 0) --k;
            h[k++] = points[i];
        }
        for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {
            while (k >= lo && cr(h[k - 2], h[k - 1], points[i]) <= 0) --k;
            h[k++] = points[i];
        }
        h.resize(k - 1);
        double tw = 0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            const auto& a = h[i];
            const auto& b = h[(i + 1) % h.size()];
            tw += a[0] * b[1] - a[1] * b[0];
        }
        return 0.5 * tw;
    }
    return hull_nd(dim, std::move(points)).volume;
}

}  // namespace hullvol::nd
