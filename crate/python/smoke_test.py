"""Smoke test for the Python bindings.

Build and install first, e.g. `maturin develop -m crates/py/Cargo.toml`.
"""

from fractions import Fraction

import ellone_py as el


def main():
    circle = el.Complex(3, [[0, 1], [1, 2], [0, 2]])
    assert circle.betti() == [1, 1]

    z = el.fundamental_class(circle)
    assert el.l1_seminorm(circle, z)["value"] == "3"
    report = el.duality_check(circle, z)
    assert report["status"] == "attained"
    assert report["linf_dual"] == "1/3"

    f = el.Cochain(1, {0: 1, 1: "-1/2", 2: Fraction(2)})
    assert el.kronecker(f, z) == "-3/2"
    assert el.linf_seminorm(circle, f)["value"] == "1/2"
    theta = el.theta_circle(3, f)
    assert Fraction(el.kronecker(theta, z)) == Fraction(-3, 2)

    g = el.Cochain(0, {0: 4, 1: -1, 2: "1/3"})
    primitive = el.integrate1(circle, circle.coboundary(g))
    assert circle.coboundary(primitive) == circle.coboundary(g)

    torus = el.Complex.corpus("torus7")
    assert torus.betti() == [1, 2, 1]
    assert el.subdivision_counts(el.Complex(3, [[0, 1, 2]]), 2)[2][2] == 36

    s3 = el.group_cohomology_rank(2, generators=[[1, 0, 2], [1, 2, 0]])
    assert s3["rank_homogeneous"] == 0 and s3["pipelines_agree"]

    print("smoke test passed")


if __name__ == "__main__":
    main()
