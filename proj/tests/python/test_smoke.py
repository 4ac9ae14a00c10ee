"""Smoke tests for the _hullvol extension module (run with PYTHONPATH set to
the build directory containing _hullvol)."""
import math
import sys

import _hullvol as hv


def approx(a, b, tol):
    assert abs(a - b) < tol, f"{a} != {b} within {tol}"


def main():
    tri = [("0", "0"), ("1", "0"), ("0", "1")]

    res = hv.c_tr(tri)
    assert res["exact"]
    assert res["exact_value"] == "3"
    approx(res["value"], 3.0, 1e-12)

    res = hv.c_0(tri)
    assert res["exact_value"] == "4"

    res = hv.c_1([("0", "0"), ("1", "0"), ("1", "1"), ("0", "1")], tol=1e-9)
    assert not res["exact"]
    approx(res["value"], 3.0, 1e-5)

    pent = hv.regular_gon_vertices(5)
    assert len(pent) == 5
    approx(hv.c_tr(pent)["value"], (10 + math.sqrt(5)) / 5, 1e-6)

    hexagon = [("1", "0"), ("0", "1"), ("-1", "1"), ("-1", "0"), ("0", "-1"), ("1", "-1")]
    assert hv.is_radon(hexagon)
    square = [("1", "1"), ("-1", "1"), ("-1", "-1"), ("1", "-1")]
    assert not hv.is_radon(square)

    approx(hv.v_ball(3), 4 * math.pi / 3, 1e-12)

    cube = [[float(m & 1), float((m >> 1) & 1), float((m >> 2) & 1)] for m in range(8)]
    approx(hv.hull_volume(3, cube), 1.0, 1e-12)
    approx(hv.c_tr_ball(3)["value"], 2.5, 1e-4)
    assert hv.c_tr_nd(3, cube)["value"] > 2.6

    search = hv.minimize_functional(3, "tr", restarts=2, seed=1)
    approx(search["value"], 3.0, 1e-9)
    assert len(search["best"]) == 3

    checks = hv.verify_suite("thm5")
    assert checks and all(c["pass"] for c in checks)

    # invalid input surfaces as the registered exception
    try:
        hv.c_tr([("0", "0"), ("1", "1"), ("2", "2")])
    except hv.GeometryError:
        pass
    else:
        raise AssertionError("expected GeometryError for collinear input")

    print("python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
