#pragma once

#include <cstdint>
#include <optional>

#include "hullvol/functionals2d.hpp"

namespace hullvol {

enum class Functional2D { tr, c0, c1 };

struct SearchConfig {
    int m = 5;
    Functional2D functional = Functional2D::tr;
    int restarts = 20;
    int max_iters = 400;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    double c1_inner_tol = 1e-7;
};

struct RestartOutcome {
    std::uint64_t seed;
    double value;
};

struct SearchResult {
    ConvexPolygon best;
    double value;
    std::vector<RestartOutcome> per_restart;  // sorted ascending by value
    double regularity;
};

/// m points on a random ellipse with angular jitter, hulled; regenerated
/// until exactly m vertices survive. Deterministic per seed; throws
/// GenerationFailure after 1000 attempts.
ConvexPolygon random_polygon(int m, std::uint64_t seed);

/// Centroid to the origin, second-moment matrix to a multiple of the
/// identity, area 1. Quotients out the affine group for the tr and c0
/// searches.
ConvexPolygon affine_normalize(const ConvexPolygon& p);

/// Centroid to the origin, area 1 (similarity only; used for c1).
ConvexPolygon similarity_normalize(const ConvexPolygon& p);

/// (max_i A_i - min_i A_i)/area where A_i is the area of the consecutive
/// vertex triple; 0 exactly for affinely regular polygons.
double regularity_deviation(const ConvexPolygon& p);

/// Proven minimum for the functional over convex m-gons, when known.
std::optional<double> known_floor(Functional2D f, int m);

/// Multi-restart Nelder-Mead over the 2m vertex coordinates with a
/// convexity penalty; tr and c0 evaluate exactly after snapping to a
/// dyadic grid. Throws if a result lands below a proven floor.
SearchResult minimize_functional(const SearchConfig& cfg);

}  // namespace hullvol
