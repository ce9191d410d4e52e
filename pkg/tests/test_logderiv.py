import pytest

from logdiv.errors import Inconclusive, NonLogarithmicError, NotReducedError
from logdiv.groebner import Ideal, ideal_membership
from logdiv.logderiv import (
    Derivation,
    DivisorSpec,
    NotFree,
    apply,
    exponents,
    freeness_certificate,
    logderiv_generators,
    logderivations_of_degree,
    poly_determinant,
    saito_check,
)
from logdiv.poly import Poly, parse_poly


def D(text, n=2):
    return DivisorSpec(n, parse_poly(text, n + 1))


def arr(forms, n=2):
    return DivisorSpec.from_arrangement([parse_poly(t, n + 1) for t in forms], n)


def test_euler_is_logarithmic():
    f = parse_poly("x*y*(x - y)*z", 3)
    theta = Derivation.euler(3)
    assert apply(theta, f) == f * 4


def test_boolean_exponents():
    assert exponents(D("x*y*z")) == (1, 1, 1)
    assert exponents(arr(["x", "y", "z", "w"], 3)) == (1, 1, 1, 1)


def test_braid_saito_certificate():
    Dv = arr(["x", "y", "z", "x - y", "y - z", "x - z"])
    cert = freeness_certificate(Dv)
    assert cert.is_free and cert.exponents == (1, 2, 3)
    assert cert.determinant == Dv.f * cert.saito_scalar
    assert sum(cert.exponents) == Dv.degree


def test_two_lines():
    assert exponents(D("x*y")) == (0, 1, 1)


def test_four_generic_lines_not_free():
    res = exponents(arr(["x", "y", "x + y + z", "x - 2*y + 3*z"]), degree_bound=4)
    assert isinstance(res, NotFree)
    assert res.generator_count != 3
    gens, _ = logderiv_generators(arr(["x", "y", "x + y + z", "x - 2*y + 3*z"]), 4)
    assert sorted(t.degree for t in gens) == [1, 2, 2, 2]


def test_free_curves():
    assert exponents(D("z*(y*z - x^2)")) == (1, 1, 1)
    assert exponents(D("y*(y^2*z - x^3)")) == (1, 1, 2)


def test_empty_divisor():
    assert exponents(DivisorSpec.empty(2)) == (0, 0, 0)


def test_every_generator_is_logarithmic():
    Dv = arr(["x", "y", "x - y", "z"])
    gens, complete = logderiv_generators(Dv, 4)
    assert complete
    principal = Ideal([Dv.f])
    for theta in gens:
        assert ideal_membership(apply(theta, Dv.f), principal)


def test_degree_pieces():
    f = parse_poly("x*y*z", 3)
    basis = logderivations_of_degree(f, 1)
    assert len(basis) == 3  # x dx, y dy, z dz
    assert logderivations_of_degree(f, 0) == []


def test_small_bound_is_inconclusive():
    with pytest.raises(Inconclusive):
        exponents(arr(["x", "y", "z", "x - y", "y - z", "x - z"]), degree_bound=2)


def test_saito_rejects_non_logarithmic():
    Dv = D("x*y*z")
    cands = [Derivation.partial(i, 3) for i in range(3)]
    with pytest.raises(NonLogarithmicError):
        saito_check(cands, Dv)
    with pytest.raises(ValueError):
        saito_check(cands[:2], Dv)


def test_determinant():
    x, y = parse_poly("x", 2), parse_poly("y", 2)
    assert poly_determinant([[x, y], [y, x]]) == x * x - y * y


def test_reducedness_and_validation():
    with pytest.raises(NotReducedError):
        D("x^2*y").check_reduced()
    with pytest.raises(ValueError):
        D("x^2 + y")  # not homogeneous
    with pytest.raises(ValueError):
        DivisorSpec.from_arrangement([parse_poly("x^2", 3)], 2)


def test_recognize_arrangement():
    Dv = D("x*y*(x + y + z)")
    assert Dv.recognize_arrangement()
    assert len(Dv.arrangement_forms) == 3
    assert not D("z*(y*z - x^2)").recognize_arrangement()
