"""Local invariants of hypersurface germs and the local tests built on them.

Germs live at the origin of an affine chart.  Local lengths are computed as
dim Q[x]/(I + m^k) for growing k, which is supported at the origin alone, so
no local monomial order is needed and other critical points never leak in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .arrangement import eliminate
from .errors import Inconclusive, NotIsolatedError, NotSingularError
from .groebner import Ideal, groebner_basis, ideal_equal, ideal_membership, local_quotient_dimension, quotient_dimension
from .logderiv import DivisorSpec, bounded_logderivations, logderiv_generators
from .poly import Poly


@dataclass(frozen=True)
class GermSpec:
    g: Poly

    def __post_init__(self):
        if self.g.constant_term() != 0:
            raise ValueError("germ must vanish at the origin")

    @property
    def nvars(self):
        return self.g.nvars


def jacobian_ideal(g: Poly) -> Ideal:
    return Ideal(g.gradient(), g.nvars)


def tjurina_ideal(g: Poly) -> Ideal:
    return Ideal([g] + g.gradient(), g.nvars)


def _local_length(I: Ideal):
    q = quotient_dimension(I)
    cap = q.dimension + 1 if q.finite else 64
    return local_quotient_dimension(I, max_power=max(cap, 2))


def milnor_number(germ: GermSpec) -> int:
    """mu = dim O_0 / (dg).  Raises NotIsolatedError for non-isolated singularities."""
    return _local_length(jacobian_ideal(germ.g))


def tjurina_number(germ: GermSpec) -> int:
    return _local_length(tjurina_ideal(germ.g))


@dataclass
class GermInvariants:
    milnor: int
    tjurina: int
    global_milnor: int | None
    origin_supported: bool | None

    @property
    def quasihomogeneous(self):
        return self.milnor == self.tjurina


def germ_invariants(germ: GermSpec) -> GermInvariants:
    J = jacobian_ideal(germ.g)
    q = quotient_dimension(J)
    mu = milnor_number(germ)
    tau = tjurina_number(germ)
    if tau > mu:
        raise AssertionError(f"tjurina {tau} exceeds milnor {mu}")
    return GermInvariants(mu, tau, q.dimension, q.origin_supported)


def quasihomogeneity_test(germ: GermSpec) -> bool:
    """mu == tau (Saito's characterisation for isolated singularities)."""
    inv = germ_invariants(germ)
    if inv.milnor == 0:
        raise NotSingularError("the germ is smooth at the origin")
    return inv.quasihomogeneous


def germ_at_point(f: Poly, point, chart: int | None = None) -> GermSpec:
    """Local equation of the projective hypersurface f = 0 at ``point``.

    Sets the chart coordinate to 1 and translates the point to the origin.
    """
    point = [Fraction(a) for a in point]
    if chart is None:
        chart = max(i for i, a in enumerate(point) if a != 0)
    if point[chart] == 0:
        raise ValueError("point lies outside the requested chart")
    point = [a / point[chart] for a in point]
    m = f.nvars - 1
    names = tuple(nm for i, nm in enumerate(f.names) if i != chart)
    images, j = [], 0
    for i in range(f.nvars):
        if i == chart:
            images.append(Poly.constant(1, m, names))
        else:
            images.append(Poly.var(j, m, names) + point[i])
            j += 1
    g = f.substitute(images)
    if g.constant_term() != 0:
        raise ValueError(f"point {point} is not on the hypersurface")
    return GermSpec(g)


# -- triviality index ----------------------------------------------------------


def triviality_membership(h: Poly, x_vars, y_vars) -> bool:
    """Is every d h/d y_j in (h, d h/d x_1, ..., d h/d x_n)?"""
    xs, ys = set(x_vars), set(y_vars)
    if xs & ys or xs | ys != set(range(h.nvars)):
        raise ValueError("x_vars and y_vars must partition the variables")
    I = Ideal([h] + [h.diff(i) for i in sorted(xs)], h.nvars)
    return all(ideal_membership(h.diff(j), I) for j in sorted(ys))


@dataclass
class TrivialityIndex:
    lower_bound: int
    exact: bool
    degree_bound: int
    values: list = field(default_factory=list, repr=False)


def _log_fields(f: Poly, degree_bound):
    if f.is_homogeneous():
        gens, _ = logderiv_generators(DivisorSpec(f.nvars - 1, f), degree_bound)
        return gens
    return bounded_logderivations(f, degree_bound)


def triviality_index(f: Poly, p, degree_bound: int | None = None) -> TrivialityIndex:
    """Certified lower bound for t(p) from polynomial log fields of degree <= bound.

    The bound is exact when it reaches nvars - 1, or at the origin of a cone
    (homogeneous f), where a nonvanishing log field must have a constant part
    killing f.
    """
    p = [Fraction(a) for a in p]
    if f.evaluate(p) != 0:
        raise ValueError("point is not on the divisor")
    if degree_bound is None:
        degree_bound = max(f.total_degree(), 1)
    fields = _log_fields(f, degree_bound)
    values = [t.evaluate(p) for t in fields]
    r = linalg.rank(values, f.nvars) if values else 0
    exact = r == f.nvars - 1
    if f.is_homogeneous() and not any(p):
        exact = True
        r = sum(1 for t in fields if t.degree == 0)
    return TrivialityIndex(r, exact, degree_bound, values)


def triviality_index_lower_bound(f: Poly, p, degree_bound: int | None = None) -> int:
    return triviality_index(f, p, degree_bound).lower_bound


def transversality_check(f: Poly, p, H: Poly, degree_bound: int | None = None):
    """True / False, or None when the lower bound on TD_p cannot decide."""
    p = [Fraction(a) for a in p]
    if H.evaluate(p) != 0 or f.evaluate(p) != 0:
        raise ValueError("point must lie on both the divisor and the hyperplane")
    normal = [H.coefficient(tuple(int(t == i) for t in range(H.nvars))) for i in range(H.nvars)]
    tri = triviality_index(f, p, degree_bound)
    for v in tri.values:
        if sum(a * b for a, b in zip(normal, v)) != 0:
            return True
    return False if tri.exact else None


# -- schematic Bertini ---------------------------------------------------------


def _dehomogenize(polys, j):
    m = polys[0].nvars
    images = [Poly.constant(1, m, polys[0].names) if i == j else Poly.var(i, m, polys[0].names) for i in range(m)]
    return [q.substitute(images) for q in polys]


def bertini_schematic_check(f: Poly, H: Poly, chart: int):
    """Compare (f, df)|_H with (g, dg), g = f|_H, as subschemes of H.

    The comparison is made in every standard affine chart of H, which is
    equality of the projective subschemes.  Returns None if a Groebner
    computation runs out of budget.
    """
    restricted = [eliminate(q, H, chart) for q in [f] + f.gradient()]
    g = restricted[0]
    own = [g] + g.gradient()
    m = g.nvars
    try:
        for j in range(m):
            I1 = Ideal(_dehomogenize(restricted, j), m)
            I2 = Ideal(_dehomogenize(own, j), m)
            if not ideal_equal(I1, I2):
                return False
    except Inconclusive:
        return None
    return True


def sample_hyperplane(rng, nvars, lo=-7, hi=7, f: Poly | None = None, names=None):
    """Random integer hyperplane and an elimination chart; rejects degenerate draws.

    A draw is degenerate when it is the zero form or, if ``f`` is given, a
    component of f = 0 (the restriction vanishes identically).
    """
    while True:
        coeffs = [rng.randint(lo, hi) for _ in range(nvars)]
        if not any(coeffs):
            continue
        H = Poly.linear_form(coeffs, names)
        chart = max(i for i, c in enumerate(coeffs) if c)
        if f is not None and eliminate(f, H, chart).is_zero():
            continue
        return H, chart


# -- plane curve singularities ---------------------------------------------------


@dataclass
class SingularPoint:
    point: tuple
    milnor: int
    tjurina: int

    @property
    def quasihomogeneous(self):
        return self.milnor == self.tjurina


@dataclass
class CurveSingularities:
    points: list
    complete: bool
    note: str = ""


def _rational_roots(p: Poly, var: int):
    """Rational roots of a univariate polynomial in variable ``var``."""
    import sympy

    if p.is_zero():
        raise ValueError("zero polynomial")
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** e[var] for e, c in p.terms.items())
    roots = sympy.Poly(expr, t, domain="QQ").ground_roots()
    return sorted(Fraction(int(r.p), int(r.q)) for r in roots)


def _affine_rational_solutions(I: Ideal):
    """Rational points of a zero-dimensional ideal in two variables."""
    G = groebner_basis(I, "lex")
    if G.is_unit():
        return []
    univariate = [g for g in G.basis if g.variables_used() <= {1}]
    if not univariate:
        raise Inconclusive("ideal is not zero-dimensional")
    sols = []
    for y in _rational_roots(univariate[0], 1):
        polys = []
        for g in G.basis:
            h = Poly({}, 2)
            for e, c in g.terms.items():
                h = h + Poly({(e[0], 0): c * y ** e[1]}, 2)
            if not h.is_zero():
                polys.append(h)
        if not polys:
            raise Inconclusive("fibre is not zero-dimensional")
        if any(h.is_constant() for h in polys):
            continue
        common = set.intersection(*(set(_rational_roots(h, 0)) for h in polys))
        for x in sorted(common):
            sols.append((x, y))
    return sols


def _normalize_point(p):
    p = [Fraction(a) for a in p]
    k = max(i for i, a in enumerate(p) if a != 0)
    return tuple(a / p[k] for a in p)


def plane_curve_singularities(f: Poly, declared=None) -> CurveSingularities:
    """Singular points of the plane curve f = 0 with their Milnor and Tjurina numbers.

    Rational singular points are found automatically (and ``declared`` points
    are added).  ``complete`` certifies that the listed points carry the full
    Tjurina length of every standard affine chart, so nothing was missed.
    """
    if f.nvars != 3:
        raise ValueError("plane curves need three homogeneous variables")
    found = {}
    notes = []
    for p in declared or []:
        found[_normalize_point(p)] = None
    chart_totals = {}
    for j in range(3):
        affine = _dehomogenize([f], j)[0]
        names = tuple(nm for i, nm in enumerate(f.names) if i != j)
        keep = [i for i in range(3) if i != j]
        g = Poly({tuple(e[i] for i in keep): c for e, c in affine.terms.items()}, 2, names)
        T = tjurina_ideal(g)
        q = quotient_dimension(T)
        if not q.finite:
            raise NotIsolatedError("the curve has non-isolated singularities (not reduced?)")
        chart_totals[j] = q.dimension
        try:
            sols = _affine_rational_solutions(T)
        except Inconclusive as exc:
            notes.append(str(exc))
            sols = []
        for a, b in sols:
            pt = [Fraction(0)] * 3
            pt[keep[0]], pt[keep[1]], pt[j] = a, b, Fraction(1)
            found.setdefault(_normalize_point(pt), None)
    points = []
    for pt in sorted(found):
        germ = germ_at_point(f, pt)
        mu, tau = milnor_number(germ), tjurina_number(germ)
        if mu == 0:
            notes.append(f"declared point {pt} is smooth")
            continue
        points.append(SingularPoint(pt, mu, tau))
    complete = all(
        sum(s.tjurina for s in points if s.point[j] != 0) == total for j, total in chart_totals.items()
    )
    if not complete:
        notes.append("irrational or undetected singular points remain")
    return CurveSingularities(points, complete, "; ".join(notes))
