from fractions import Fraction

from hypothesis import given, settings, strategies as st

from logdiv import linalg

rows = st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), max_size=7)


@settings(max_examples=80, deadline=None)
@given(rows)
def test_nullspace_is_kernel(m):
    null = linalg.nullspace(m, 5)
    assert len(null) == 5 - linalg.rank(m, 5)
    for v in null:
        for r in m:
            assert sum(a * b for a, b in zip(r, v)) == 0


@settings(max_examples=80, deadline=None)
@given(rows, rows)
def test_echelon_basis_tracks_rank(seed, extra):
    E = linalg.EchelonBasis(seed, 5)
    assert E.rank == linalg.rank(seed, 5)
    current = list(seed)
    for v in extra:
        grew = E.add(v)
        current.append(v)
        assert grew == (linalg.rank(current, 5) > linalg.rank(current[:-1], 5))
        assert E.rank == linalg.rank(current, 5)


def test_solve():
    x = linalg.solve([[1, 1], [1, -1]], 2, [Fraction(3), Fraction(1)])
    assert x == [2, 1]
    assert linalg.solve([[1, 1], [2, 2]], 2, [1, 3]) is None
