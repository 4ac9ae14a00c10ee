#pragma once

#include <vector>

namespace hullvol::nd {

using VecN = std::vector<double>;

struct Facet {
    std::vector<int> vertices;  // simplicial: dim indices into points
    VecN normal;                // outward unit normal
    double offset;              // normal . x = offset on the facet plane
    double measure;             // (dim-1)-volume
};

struct HullResult {
    int dim;
    std::vector<VecN> points;  // deduplicated input points
    std::vector<Facet> facets;
    double volume;
    VecN interior;  // strictly interior point
};

/// Incremental convex hull of full-dimensional point sets, 2 <= dim <= 6.
/// Near-degenerate orientation signs (relative eps 1e-12) are resolved
/// exactly in rational arithmetic; points on a facet hyperplane count as
/// visible so coplanar vertices are never dropped.
HullResult hull_nd(int dim, std::vector<VecN> points);

/// Hull volume only; dim 2 short-circuits to a monotone chain.
double hull_volume(int dim, std::vector<VecN> points);

}  // namespace hullvol::nd
