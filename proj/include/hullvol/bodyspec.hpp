#pragma once

#include <optional>
#include <string>

#include "hullvol/bodies_nd.hpp"
#include "hullvol/polygon.hpp"

namespace hullvol {

/// Parsed body document. Planar kinds carry an exact polygon; solid kinds
/// carry a numeric nD body.
struct BodySpec {
    std::string kind;
    int dim;
    std::optional<ConvexPolygon> polygon;
    std::optional<nd::BodyN> body;
    double approx_error = 0;  // vertex rationalization bound for *_gon kinds
};

/// Best rational approximation of x within tol by continued-fraction
/// convergents.
Rational rationalize(double x, double tol);

/// Rational-vertex approximation of the regular m-gon inscribed in the
/// unit circle; each vertex within tol of the exact position.
ConvexPolygon regular_gon(int m, double tol = 1e-9);

/// Parses a JSON body document. Throws ParseError on malformed input.
/// Kinds: polygon, polytope, ball, ellipsoid, regular_gon, disk_gon.
BodySpec parse_body_json(const std::string& text);

/// Reads and parses a body file.
BodySpec parse_body_file(const std::string& path);

}  // namespace hullvol
