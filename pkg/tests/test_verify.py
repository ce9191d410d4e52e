import glob
import random

import pytest

from logdiv.arrangement import intersection_lattice, random_arrangement
from logdiv.errors import NotReducedError
from logdiv.io import load_divisor
from logdiv.logderiv import DivisorSpec, exponents, NotFree
from logdiv.poly import parse_poly
from logdiv.verify import (
    FAIL,
    HYPOTHESIS_VIOLATED,
    NOT_FREE,
    PASS,
    corpus_run,
    degree_equality_check,
    main_theorem_check,
    section_preservation_check,
    section_recursion_check,
)

from conftest import CORPUS


def load(name):
    return load_divisor(CORPUS / f"{name}.json")


@pytest.mark.parametrize(
    "name,expected",
    [("boolean_p2", [1, 0, 0]), ("boolean_p3", [1, 0, 0, 0]), ("boolean_p4", [1, 0, 0, 0, 0]),
     ("braid_a3", [1, -3, 2]), ("two_lines", [1, 1, 0]), ("empty_p2", [1, 3, 3]),
     ("points_p1_3", [1, -1]), ("conic_tangent_line", [1, 0, 0]), ("cuspidal_cubic_tangent", [1, -1, 0]),
     ("cuspidal_cubic_flex", [1, -1, 0]), ("near_pencil_p2", [1, -1, 0]), ("braid_a4", [1, -2, -1, 2])],
)
def test_theorem_passes(name, expected):
    for mode in ("full", "degrees"):
        rep = main_theorem_check(load(name), mode=mode)
        assert rep.verdict == PASS
        assert rep.csm == rep.chern == expected
        assert rep.degrees_csm == rep.degrees_chern


def test_not_free_keeps_csm():
    rep = main_theorem_check(load("four_generic_lines"))
    assert rep.verdict == NOT_FREE
    assert rep.csm == [1, -1, 1] and rep.chern is None
    assert rep.cross_checks["charpoly_route_agrees"]


def test_sextic_violates_hypothesis():
    rep = main_theorem_check(load("example23_sextic"))
    assert rep.verdict == HYPOTHESIS_VIOLATED
    assert rep.csm is None
    assert rep.cross_checks["euler_characteristic_complement"] == 5
    assert rep.singular_points[0]["milnor"] == 16 and rep.singular_points[0]["tjurina"] == 15


def test_non_reduced_rejected():
    with pytest.raises(NotReducedError):
        main_theorem_check(load("nonreduced_x2y"))


def test_degree_equality():
    assert degree_equality_check(load("braid_a3"))
    assert degree_equality_check(load("boolean_p2"))
    assert degree_equality_check(load("points_p1_3"))
    with pytest.raises(ValueError):
        degree_equality_check(load("four_generic_lines"))


ARRANGEMENTS = ["boolean_p2", "boolean_p3", "braid_a3", "braid_a4", "two_lines", "four_generic_lines",
                "near_pencil_p2", "empty_p2"]


@pytest.mark.parametrize("name", ARRANGEMENTS)
def test_csm_recursion_on_arrangements(name):
    rep = section_recursion_check(load(name), "csm", seed=0)
    assert rep.verdict == PASS
    assert all(r["ok"] for r in rep.rows) and len(rep.rows) == load(name).n


def test_boolean_p3_chain():
    rep = section_recursion_check(load("boolean_p3"), "csm")
    assert rep.class_on_section == [1, -1, 1]
    assert [(r["lhs"], r["rhs_lower"], r["rhs_same"]) for r in rep.rows] == [(0, 1, -1), (0, -1, 1), (1, 1, 0)]


def test_chern_recursion_braid():
    rep = section_recursion_check(load("braid_a3"), "chern")
    assert rep.verdict == PASS
    assert rep.class_on_section == [1, -4]


@pytest.mark.parametrize("name", ["braid_a3", "two_lines", "empty_p2", "conic_tangent_line", "braid_a4"])
def test_chern_recursion_free(name):
    assert section_recursion_check(load(name), "chern").verdict == PASS


def test_chern_recursion_needs_free_section():
    assert section_recursion_check(load("boolean_p3"), "chern").verdict == "inconclusive"


def test_preservation():
    assert section_preservation_check(load("braid_a3")).verdict == "preserved"
    assert section_preservation_check(load("empty_p2")).verdict == "preserved"
    rep = section_preservation_check(load("boolean_p3"))
    assert rep.verdict == "not preserved" and rep.free_after is False


def test_recursion_rejects_small_n():
    with pytest.raises(ValueError):
        section_recursion_check(load("points_p1_3"))


def test_seed_recorded_and_reproducible():
    a = section_recursion_check(load("braid_a3"), "chern", seed=7)
    b = section_recursion_check(load("braid_a3"), "chern", seed=7)
    assert a.to_dict() == b.to_dict() and a.seed == 7


def test_corpus_run():
    paths = sorted(glob.glob(str(CORPUS / "*.json")))
    summary = corpus_run(paths)
    assert summary.exit_code == 0
    assert not any(r.verdict == FAIL for r in summary.reports)
    assert list(summary.errors.values()) == ["not reduced"]
    assert corpus_run([]).reports == []
    assert "missing.json" in next(iter(corpus_run([CORPUS / "missing.json"]).errors))


@pytest.mark.parametrize("seed", range(12))
def test_random_arrangements_no_false_pass(seed):
    rng = random.Random(seed)
    fs = random_arrangement(rng, rng.randint(1, 6), 2)
    D = DivisorSpec.from_arrangement(fs, 2, f"random{seed}")
    rep = main_theorem_check(D)
    ex = exponents(D)
    if isinstance(ex, NotFree):
        assert rep.verdict == NOT_FREE and rep.chern is None and rep.csm is not None
    else:
        assert rep.verdict == PASS
    assert section_recursion_check(D, "csm", seed=seed).verdict == PASS
