#pragma once

#include <cstdint>
#include <variant>

#include "hullvol/hull_nd.hpp"

namespace hullvol::nd {

struct Polytope {
    int dim;
    std::vector<VecN> vertices;  // deduplicated; extreme points of the hull
    std::vector<Facet> facets;   // simplicial, outward unit normals
    double volume;
    VecN interior;
};

struct Ellipsoid {
    int dim;
    VecN center;
    VecN semiaxes;                   // a_1..a_n > 0
    std::vector<VecN> orientation;  // orthogonal matrix, rows; column i is axis i
};

struct Ball {
    int dim;
    double radius;
    VecN center;
};

using BodyN = std::variant<Polytope, Ellipsoid, Ball>;

/// Hulls the points; throws DegenerateBody if not full-dimensional.
Polytope make_polytope(int dim, std::vector<VecN> points);

/// Validates semiaxes > 0 and orthogonality of the orientation (1e-12).
Ellipsoid make_ellipsoid(VecN center, VecN semiaxes, std::vector<VecN> orientation);

/// Volume of the unit n-ball.
double v_ball(int n);

int body_dim(const BodyN& b);
double volume_nd(const BodyN& b);

struct SupportWidth {
    double h_plus;
    double h_minus;
    double width;  // h_plus + h_minus
};

SupportWidth support_width_nd(const BodyN& b, VecN u);

/// Length of a maximal chord parallel to u (radial function of the
/// difference body).
double chord_nd(const BodyN& b, VecN u);

/// (n-1)-volume of the shadow on u-perp.
double brightness_nd(const BodyN& b, VecN u);

struct DirOptions {
    int coarse_samples = 0;  // 0: choose by dimension
    int refine_iters = 200;
    double tol = 1e-7;
    std::uint64_t seed = 0x5eed5eed;
};

struct DirOptResult {
    double value;
    VecN direction;  // unit
    int samples_used;
    bool refined;
};

/// Deterministic low-discrepancy directions: uniform circle (n=2),
/// Fibonacci spiral (n=3), seeded Gaussian (n >= 4).
std::vector<VecN> sphere_directions(int dim, int count, std::uint64_t seed);

/// c^tr: 1 + max_u chord(u) * brightness(u) / volume.
DirOptResult c_tr_nd(const BodyN& b, const DirOptions& opts = {});

/// c_{n-1}: max over supporting hyperplanes of
/// vol(hull(B, reflect(B))) / vol(B). Polytope or Ball; ellipsoids are
/// reduced to the ball when spherical, otherwise polytope-approximated.
DirOptResult c_hyp_nd(const BodyN& b, const DirOptions& opts = {});

/// c_0: max over vertices x of vol(hull(B, 2x - B)) / vol(B); closed form
/// for balls. Polytope or Ball only.
DirOptResult c_0_nd(const BodyN& b, const DirOptions& opts = {});

struct CylinderCheck {
    DirOptResult max_right;  // max_u width(u)*brightness(u)/vol
    DirOptResult min_right;  // min over u of the same
};

CylinderCheck cylinder_check(const BodyN& b, const DirOptions& opts = {});

/// Validation mode: best hull ratio over non-supporting reflection
/// hyperplanes (recorded, not asserted against the supporting maximum).
DirOptResult c_hyp_validation(const BodyN& b, const DirOptions& opts = {});

/// Validation mode: c_0 objective sampled at interior points.
DirOptResult c_0_validation(const BodyN& b, const DirOptions& opts = {});

/// Reflection of the body's point set across the hyperplane x.u = t.
std::vector<VecN> reflect_points(const std::vector<VecN>& pts, const VecN& u, double t);

}  // namespace hullvol::nd
