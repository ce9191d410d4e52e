import glob
import random

import pytest

from logdiv.errors import NotIsolatedError, NotSingularError
from logdiv.io import load_divisor
from logdiv.poly import parse_poly
from logdiv.singular import (
    GermSpec,
    bertini_schematic_check,
    germ_at_point,
    germ_invariants,
    milnor_number,
    plane_curve_singularities,
    quasihomogeneity_test,
    sample_hyperplane,
    tjurina_number,
    transversality_check,
    triviality_index,
    triviality_membership,
)

from conftest import CORPUS
from oracles import milnor_oracle, tjurina_oracle


def germ(text, n=2):
    return GermSpec(parse_poly(text, n))


@pytest.mark.parametrize(
    "text,mu,tau",
    [("x^2 - y^2", 1, 1), ("y^2 - x^3", 2, 2), ("x^5 + y^5", 16, 16), ("x^5 + x^3*y^3 + y^5", 16, 15),
     ("y^3 - x^3*y", 7, 7), ("x^4 + x^2*y^3 + y^5", 12, 11)],
)
def test_milnor_tjurina(text, mu, tau):
    g = germ(text)
    assert milnor_number(g) == mu and tjurina_number(g) == tau
    assert milnor_oracle(g.g) == mu and tjurina_oracle(g.g) == tau


def test_example_sextic_chart():
    inv = germ_invariants(germ("x^5 + x^3*y^3 + y^5"))
    assert inv.milnor > inv.tjurina
    assert not inv.quasihomogeneous
    # the global Jacobian quotient also sees critical points away from the origin
    assert inv.global_milnor == 21 and not inv.origin_supported


def test_qh_errors():
    with pytest.raises(NotSingularError):
        quasihomogeneity_test(germ("x + y^2"))
    with pytest.raises(NotIsolatedError):
        milnor_number(germ("x^2", 2))
    with pytest.raises(ValueError):
        germ("x + 1")


@pytest.mark.parametrize("path", sorted(glob.glob(str(CORPUS / "germs" / "*.txt"))))
def test_mu_at_least_tau_on_corpus(path):
    inv = germ_invariants(load_divisor(path).germ)
    assert inv.milnor >= inv.tjurina


def test_germ_at_point():
    f = parse_poly("x^5*z + x^3*y^3 + y^5*z", 3)
    g = germ_at_point(f, (0, 0, 1))
    assert g.g == parse_poly("x^5 + x^3*y^3 + y^5", ("x0", "x1"))
    with pytest.raises(ValueError):
        germ_at_point(f, (1, 1, 1))


def test_triviality_cone():
    f = parse_poly("z^2 - x*y", 3)
    t0 = triviality_index(f, (0, 0, 0))
    assert t0.lower_bound == 0 and t0.exact
    # no variable splits off at the vertex
    for j in range(3):
        rest = [i for i in range(3) if i != j]
        assert not triviality_membership(f, rest, [j])


def test_triviality_smooth_point():
    f = parse_poly("z^2 - x*y", 3)
    t = triviality_index(f, (1, 4, 2))
    assert t.lower_bound == 2 and t.exact
    with pytest.raises(ValueError):
        triviality_index(f, (1, 1, 2))


def test_transversality():
    f = parse_poly("x*y", 3)
    assert transversality_check(f, (0, 1, 0), parse_poly("z", 3)) is True
    # smooth point: the log fields span the tangent plane x = 0 exactly
    assert transversality_check(f, (0, 1, 0), parse_poly("x", 3)) is False
    # on the double line t = 1, but only the bound is certified
    assert transversality_check(f, (0, 0, 1), parse_poly("x - y", 3)) is None


def test_bertini_xyz():
    f = parse_poly("x*y*z", 3)
    rng = random.Random(0)
    results = []
    for _ in range(10):
        H, chart = sample_hyperplane(rng, 3, f=f)
        results.append(bertini_schematic_check(f, H, chart))
    assert sum(1 for r in results if r) >= 9


def test_bertini_detects_special_hyperplane():
    # the tangent line at the smooth point (1, 1, 1) of the cuspidal cubic
    f = parse_poly("y^2*z - x^3", 3)
    assert bertini_schematic_check(f, parse_poly("-3*x + 2*y + z", 3), 2) is False
    # the cuspidal tangent y = 0 happens to give equal schemes
    assert bertini_schematic_check(f, parse_poly("y", 3), 1) is True


def test_sample_hyperplane_rejects_components():
    f = parse_poly("x*y", 3)
    rng = random.Random(3)
    for _ in range(20):
        H, chart = sample_hyperplane(rng, 3, lo=-1, hi=1, f=f)
        assert H.coefficient((0, 0, 0)) == 0
        assert H.coefficient(tuple(int(i == chart) for i in range(3))) != 0


@pytest.mark.parametrize(
    "text,expected",
    [
        ("x*y*z", {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}),
        ("x^5*z + x^3*y^3 + y^5*z", {(0, 0, 1): 16}),
        ("y*(y^2*z - x^3)", {(0, 0, 1): 7}),
        ("z*(y^2*z - x^3)", {(0, 0, 1): 2, (0, 1, 0): 5}),
        ("z*(y*z - x^2)", {(0, 1, 0): 3}),
        ("x^3 + y^3 + z^3", {}),
    ],
)
def test_plane_curve_singularities(text, expected):
    res = plane_curve_singularities(parse_poly(text, 3))
    assert res.complete
    assert {s.point: s.milnor for s in res.points} == expected


def test_irrational_singular_points_are_flagged():
    # nodes at (+-sqrt 2, 0): the cubic's two branches cross at irrational points
    f = parse_poly("(x^2 - 2*z^2)*y", 3)
    res = plane_curve_singularities(f)
    assert not res.complete
