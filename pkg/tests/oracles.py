"""Independent reference computations used by the tests.

None of these go through the Groebner engine: they are plain linear algebra
over truncated monomial spaces, brute-force point evaluation, or sympy.
"""

from fractions import Fraction
from itertools import product as cartesian

import sympy

from logdiv import linalg
from logdiv.poly import Poly, monomials_of_degree, monomials_up_to_degree, to_sympy


def _vector(p: Poly, index):
    return {index[e]: c for e, c in p.terms.items()}


def homogeneous_membership(g: Poly, gens, nvars):
    """g in (gens) for homogeneous data: solve g = sum c * m * gen in degree deg g."""
    if g.is_zero():
        return True
    d = g.total_degree()
    monos = monomials_of_degree(nvars, d)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for q in gens:
        e = d - q.total_degree()
        if e < 0:
            continue
        for m in monomials_of_degree(nvars, e):
            rows.append(_vector(q.mul_monomial(m), index))
    r0 = linalg.rank(rows, len(monos)) if rows else 0
    r1 = linalg.rank(rows + [_vector(g, index)], len(monos))
    return r0 == r1


def truncated_colength(gens, nvars, k):
    """dim S/(I + m^k) as (#monomials of degree < k) - rank of truncated products."""
    monos = monomials_up_to_degree(nvars, k - 1)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for q in gens:
        for m in monos:
            t = q.mul_monomial(m)
            row = {index[e]: c for e, c in t.terms.items() if sum(e) < k}
            if row:
                rows.append(row)
    return len(monos) - (linalg.rank(rows, len(monos)) if rows else 0)


def local_length(gens, nvars, kmax=40):
    prev = truncated_colength(gens, nvars, 1)
    for k in range(2, kmax + 1):
        cur = truncated_colength(gens, nvars, k)
        if cur == prev:
            return cur
        prev = cur
    raise RuntimeError("no stabilisation")


def milnor_oracle(g: Poly):
    return local_length(g.gradient(), g.nvars)


def tjurina_oracle(g: Poly):
    return local_length([g] + g.gradient(), g.nvars)


def indicator_at_point(L, coeffs, point):
    """sum_x m_x 1_x(p) from the indicator coefficients at one point of C^{n+1} minus 0."""
    forms = L.forms
    vanish = frozenset(i for i, g in enumerate(forms) if g.evaluate(point) == 0)
    return sum(m for fid, m in coeffs.values.items() if L.flats[fid].forms <= vanish)


def complement_indicator(forms, point):
    return int(all(g.evaluate(point) != 0 for g in forms))


def sympy_groebner_contains(g: Poly, gens):
    polys = [to_sympy(q).as_expr() for q in gens]
    syms = to_sympy(g).gens
    G = sympy.groebner(polys, *syms, order="grevlex", domain="QQ")
    return G.contains(to_sympy(g).as_expr())


def chow_series(exps, n):
    """prod (1 + (1 - d) h) mod h^{n+1} through sympy."""
    h = sympy.Symbol("h")
    expr = sympy.expand(sympy.prod([1 + (1 - d) * h for d in exps]))
    return [int(expr.coeff(h, j)) for j in range(n + 1)]


def brute_force_points(rng, nvars, count, lo=-5, hi=5, special=None):
    """Random rational points, plus every point of ``special`` (e.g. on flats)."""
    pts = list(special or [])
    while len(pts) < count:
        p = [Fraction(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(nvars)]
        if any(p):
            pts.append(p)
    return pts


def flat_points(L, rng):
    """One random point on each nonempty flat, from its null space."""
    pts = []
    for x in L.projective_flats():
        rows = [[g.coefficient(tuple(int(t == i) for t in range(L.n + 1))) for i in range(L.n + 1)]
                for j, g in enumerate(L.forms) if j in x.forms]
        basis = linalg.nullspace(rows, L.n + 1)
        while True:
            p = [sum(Fraction(rng.randint(-3, 3)) * b[i] for b in basis) for i in range(L.n + 1)]
            if any(p):
                break
        pts.append(p)
    return pts
