#pragma once

#include <stdexcept>
#include <string>

namespace hullvol {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : GeometryError {
    using GeometryError::GeometryError;
};
struct ZeroDirection : GeometryError {
    ZeroDirection() : GeometryError("zero direction vector") {}
};
struct SingularMap : GeometryError {
    SingularMap() : GeometryError("linear map has zero determinant") {}
};
struct OriginNotInterior : GeometryError {
    OriginNotInterior() : GeometryError("origin is not strictly interior to the polygon") {}
};
struct NotATriangle : GeometryError {
    NotATriangle() : GeometryError("polygon is not a triangle") {}
};
struct NotOnBoundary : GeometryError {
    NotOnBoundary() : GeometryError("point does not lie on the polygon boundary") {}
};
struct NotSymmetric : GeometryError {
    NotSymmetric() : GeometryError("polygon is not origin-symmetric") {}
};
struct InvalidTolerance : GeometryError {
    InvalidTolerance() : GeometryError("tolerance must be positive") {}
};
struct UnsupportedBody : GeometryError {
    using GeometryError::GeometryError;
};
struct DegenerateBody : GeometryError {
    using GeometryError::GeometryError;
};
struct GenerationFailure : GeometryError {
    using GeometryError::GeometryError;
};
struct ParseError : GeometryError {
    using GeometryError::GeometryError;
};

}  // namespace hullvol
