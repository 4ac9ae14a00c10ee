#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hullvol/bodyspec.hpp"
#include "hullvol/errors.hpp"
#include "hullvol/radon.hpp"
#include "hullvol/search2d.hpp"
#include "hullvol/verify.hpp"

namespace py = pybind11;
using namespace hullvol;

namespace {

ConvexPolygon polygon_from_pairs(const std::vector<std::pair<std::string, std::string>>& pts) {
    std::vector<Vec2> v;
    v.reserve(pts.size());
    for (const auto& [x, y] : pts)
        v.emplace_back(rational_from_string(x), rational_from_string(y));
    return hull2(std::move(v));
}

py::dict functional_dict(const FunctionalValue& fv) {
    py::dict d;
    d["value"] = fv.value;
    d["exact"] = fv.exact;
    if (fv.exact) d["exact_value"] = rational_to_string(fv.exact_value);
    return d;
}

py::dict dir_opt_dict(const nd::DirOptResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["direction"] = r.direction;
    d["samples_used"] = r.samples_used;
    d["refined"] = r.refined;
    return d;
}

}  // namespace

PYBIND11_MODULE(_hullvol, m) {
    m.doc() = "convex hull volume functionals";

    py::register_exception<GeometryError>(m, "GeometryError");

    m.def("c_tr", [](const std::vector<std::pair<std::string, std::string>>& pts) {
        return functional_dict(c_tr(polygon_from_pairs(pts)));
    });
    m.def("c_0", [](const std::vector<std::pair<std::string, std::string>>& pts) {
        return functional_dict(c_0(polygon_from_pairs(pts)));
    });
    m.def(
        "c_1",
        [](const std::vector<std::pair<std::string, std::string>>& pts, double tol) {
            return functional_dict(c_1(polygon_from_pairs(pts), tol));
        },
        py::arg("vertices"), py::arg("tol") = 1e-9);
    m.def(
        "regular_gon_vertices",
        [](int mm, double tol) {
            ConvexPolygon p = regular_gon(mm, tol);
            std::vector<std::pair<std::string, std::string>> out;
            for (std::size_t i = 0; i < p.size(); ++i)
                out.emplace_back(rational_to_string(p[i].x), rational_to_string(p[i].y));
            return out;
        },
        py::arg("m"), py::arg("tol") = 1e-9);
    m.def("is_radon", [](const std::vector<std::pair<std::string, std::string>>& pts) {
        return is_radon(UnitBall2(polygon_from_pairs(pts)));
    });
    m.def("v_ball", &nd::v_ball);
    m.def("hull_volume", &nd::hull_volume, py::arg("dim"), py::arg("points"));
    m.def(
        "c_tr_nd",
        [](int dim, const std::vector<nd::VecN>& pts) {
            return dir_opt_dict(nd::c_tr_nd(nd::make_polytope(dim, pts)));
        },
        py::arg("dim"), py::arg("vertices"));
    m.def(
        "c_tr_ball",
        [](int dim, double radius) {
            return dir_opt_dict(nd::c_tr_nd(nd::Ball{dim, radius, nd::VecN(dim, 0.0)}));
        },
        py::arg("dim"), py::arg("radius") = 1.0);
    m.def(
        "minimize_functional",
        [](int mm, const std::string& functional, int restarts, std::uint64_t seed) {
            SearchConfig cfg;
            cfg.m = mm;
            cfg.restarts = restarts;
            cfg.seed = seed;
            if (functional == "tr")
                cfg.functional = Functional2D::tr;
            else if (functional == "c0")
                cfg.functional = Functional2D::c0;
            else if (functional == "c1")
                cfg.functional = Functional2D::c1;
            else
                throw GeometryError("functional must be tr, c0, or c1");
            SearchResult res = minimize_functional(cfg);
            py::dict d;
            d["value"] = res.value;
            d["regularity"] = res.regularity;
            std::vector<std::pair<std::string, std::string>> verts;
            for (std::size_t i = 0; i < res.best.size(); ++i)
                verts.emplace_back(rational_to_string(res.best[i].x),
                                   rational_to_string(res.best[i].y));
            d["best"] = verts;
            return d;
        },
        py::arg("m"), py::arg("functional"), py::arg("restarts") = 10, py::arg("seed") = 1);
    m.def("verify_suite", [](const std::string& suite) {
        py::list out;
        for (const auto& c : verify_suite(suite)) {
            py::dict d;
            d["name"] = c.name;
            d["pass"] = c.pass;
            d["measured"] = c.measured;
            d["expected"] = c.expected;
            out.append(d);
        }
        return out;
    });
}
