import random

import pytest

from logdiv.arrangement import characteristic_polynomial, intersection_lattice, random_arrangement
from logdiv.chow import chern_tangent, degrees
from logdiv.csm import (
    CurveSingularityData,
    csm_arrangement_complement,
    csm_curve_complement,
    csm_from_charpoly,
    csm_linear_subspace,
    csm_points_complement,
    divide_by_t_minus_1,
    euler_characteristic_from_charpoly,
)
from logdiv.poly import parse_poly


def lattice(texts, n=2):
    return intersection_lattice([parse_poly(t, n + 1) for t in texts], n)


def test_linear_subspaces():
    assert csm_linear_subspace(2, 2) == chern_tangent(2)
    assert csm_linear_subspace(0, 2).to_json() == [0, 0, 1]
    assert csm_linear_subspace(1, 3).to_json() == [0, 0, 1, 2]
    with pytest.raises(ValueError):
        csm_linear_subspace(3, 2)


@pytest.mark.parametrize(
    "texts,n,expected",
    [
        (["x", "y", "z"], 2, [1, 0, 0]),
        (["x", "y", "z", "w"], 3, [1, 0, 0, 0]),
        (["x", "y", "z", "x - y", "y - z", "x - z"], 2, [1, -3, 2]),
        (["x", "y"], 2, [1, 1, 0]),
        (["x", "y", "x + y + z", "x - 2*y + 3*z"], 2, [1, -1, 1]),
    ],
)
def test_lattice_route(texts, n, expected):
    L = lattice(texts, n)
    cls = csm_arrangement_complement(L)
    assert cls.to_json() == expected
    assert csm_from_charpoly(characteristic_polynomial(L), n) == cls
    assert degrees(cls)[0] == euler_characteristic_from_charpoly(characteristic_polynomial(L))


def test_braid_euler_characteristic():
    L = lattice(["x", "y", "z", "x - y", "y - z", "x - z"])
    assert euler_characteristic_from_charpoly(characteristic_polynomial(L)) == 2


def test_division():
    assert divide_by_t_minus_1((-6, 11, -6, 1)) == (6, -5, 1)
    with pytest.raises(ValueError):
        divide_by_t_minus_1((1, 1))


def test_curve_route():
    node_cubic = CurveSingularityData(3, [((0, 0, 1), 1)])
    assert node_cubic.euler_characteristic() == 1
    # cuspidal cubic with its cuspidal tangent: E7 point
    tangent = CurveSingularityData(4, [((0, 0, 1), 7)])
    assert csm_curve_complement(tangent).to_json() == [1, -1, 0]
    with pytest.raises(ValueError):
        CurveSingularityData(0)
    with pytest.raises(ValueError):
        CurveSingularityData(3, [((0, 0, 1), 1), ((0, 0, 1), 2)])


def test_points_route():
    assert csm_points_complement(3).to_json() == [1, -1]
    assert degrees(csm_points_complement(3))[0] == -1


def test_three_lines_as_curve_and_arrangement_agree():
    L = lattice(["x", "y", "z"])
    data = CurveSingularityData(3, [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1)])
    assert csm_curve_complement(data) == csm_arrangement_complement(L)


@pytest.mark.parametrize("seed", range(25))
def test_route_agreement_random(seed):
    rng = random.Random(seed)
    L = intersection_lattice(random_arrangement(rng, rng.randint(1, 6), 2), 2)
    assert csm_arrangement_complement(L) == csm_from_charpoly(characteristic_polynomial(L), 2)
