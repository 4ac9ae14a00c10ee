#include "hullvol/bodyspec.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hullvol/errors.hpp"
#include "json.hpp"

namespace hullvol {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) return rational_from_double(j.get<double>());
    throw ParseError("expected a rational string or a number");
}

std::vector<Vec2> parse_vertices2(const json& j) {
    if (!j.is_array() || j.size() < 3) throw ParseError("vertices: need an array of >= 3 points");
    std::vector<Vec2> out;
    out.reserve(j.size());
    for (const auto& pt : j) {
        if (!pt.is_array() || pt.size() != 2) throw ParseError("vertex: expected [x, y]");
        out.emplace_back(rational_from_json(pt[0]), rational_from_json(pt[1]));
    }
    return out;
}

nd::VecN parse_vecn(const json& j, int dim, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ParseError(std::string(what) + ": expected an array of length dim");
    nd::VecN v;
    v.reserve(dim);
    for (const auto& c : j) {
        if (!c.is_number()) throw ParseError(std::string(what) + ": expected numbers");
        v.push_back(c.get<double>());
    }
    return v;
}

int require_int(const json& j, const char* key, int lo, int hi) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("missing integer field: ") + key);
    int v = j[key].get<int>();
    if (v < lo || v > hi) throw ParseError(std::string(key) + " out of range");
    return v;
}

}  // namespace

Rational rationalize(double x, double tol) {
    if (!(tol > 0)) throw InvalidTolerance();
    if (!std::isfinite(x)) throw ParseError("rationalize: non-finite input");
    Rational target = rational_from_double(x);
    Rational bound = rational_from_double(tol);
    // continued fraction convergents p/q of x
    double rem = x;
    Int p0 = 1, q0 = 0;  // p_{-1}/q_{-1}
    Int p1, q1;          // current convergent
    {
        double a0 = std::floor(rem);
        p1 = Int(static_cast<long long>(a0));
        q1 = 1;
        rem -= a0;
    }
    for (int it = 0; it < 64; ++it) {
        Rational conv(p1, q1);
        if (abs(conv - target) <= bound) return conv;
        if (rem < 1e-18) break;
        rem = 1.0 / rem;
        double a = std::floor(rem);
        if (a > 9e15) break;
        Int ai(static_cast<long long>(a));
        Int p2 = ai * p1 + p0;
        Int q2 = ai * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        rem -= a;
    }
    return target;  // fall back to the exact dyadic value
}

ConvexPolygon regular_gon(int m, double tol) {
    if (m < 3) throw ParseError("regular_gon needs m >= 3");
    std::vector<Vec2> pts;
    pts.reserve(m);
    for (int k = 0; k < m; ++k) {
        double t = 2 * M_PI * k / m;
        pts.emplace_back(rationalize(std::cos(t), tol), rationalize(std::sin(t), tol));
    }
    return hull2(std::move(pts));
}

BodySpec parse_body_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("body document needs a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "polygon") {
            ConvexPolygon p = hull2(parse_vertices2(j.at("vertices")));
            return {kind, 2, std::move(p), std::nullopt, 0.0};
        }
        if (kind == "regular_gon" || kind == "disk_gon") {
            int m = require_int(j, "m", 3, 1 << 20);
            double tol = j.value("tol", 1e-9);
            if (!(tol > 0)) throw ParseError("tol must be positive");
            ConvexPolygon p = regular_gon(m, tol);
            return {kind, 2, std::move(p), std::nullopt, tol};
        }
        if (kind == "ball") {
            int dim = require_int(j, "dim", 2, 6);
            double r = j.value("radius", 1.0);
            if (!(r > 0)) throw ParseError("radius must be positive");
            nd::VecN center(dim, 0.0);
            if (j.contains("center")) center = parse_vecn(j["center"], dim, "center");
            return {kind, dim, std::nullopt, nd::Ball{dim, r, std::move(center)}, 0.0};
        }
        if (kind == "ellipsoid") {
            if (!j.contains("semiaxes")) throw ParseError("ellipsoid needs semiaxes");
            int dim = static_cast<int>(j["semiaxes"].size());
            if (dim < 2 || dim > 6) throw ParseError("semiaxes length out of range");
            nd::VecN axes = parse_vecn(j["semiaxes"], dim, "semiaxes");
            nd::VecN center(dim, 0.0);
            if (j.contains("center")) center = parse_vecn(j["center"], dim, "center");
            std::vector<nd::VecN> q(dim, nd::VecN(dim, 0.0));
            for (int i = 0; i < dim; ++i) q[i][i] = 1.0;
            if (j.contains("orientation")) {
                const auto& jo = j["orientation"];
                if (!jo.is_array() || static_cast<int>(jo.size()) != dim)
                    throw ParseError("orientation: expected dim rows");
                for (int i = 0; i < dim; ++i) q[i] = parse_vecn(jo[i], dim, "orientation row");
            }
            return {kind, dim, std::nullopt,
                    nd::make_ellipsoid(std::move(center), std::move(axes), std::move(q)), 0.0};
        }
        if (kind == "polytope") {
            int dim = require_int(j, "dim", 2, 6);
            if (!j.contains("vertices") || !j["vertices"].is_array())
                throw ParseError("polytope needs vertices");
            std::vector<nd::VecN> pts;
            pts.reserve(j["vertices"].size());
            for (const auto& pt : j["vertices"]) pts.push_back(parse_vecn(pt, dim, "vertex"));
            return {kind, dim, std::nullopt, nd::make_polytope(dim, std::move(pts)), 0.0};
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad body document: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const GeometryError& e) {
        throw ParseError(std::string("invalid body: ") + e.what());
    }
    throw ParseError("unknown body kind: " + kind);
}

BodySpec parse_body_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open body file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_body_json(ss.str());
}

}  // namespace hullvol
