"""Intersection lattices of central arrangements, Moebius data, generic sections."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .poly import Poly


@dataclass(frozen=True)
class Flat:
    """A flat of the central arrangement in C^{n+1}.

    ``forms`` is the closure: every hyperplane containing the flat.  ``rank``
    is the codimension in C^{n+1}; rank n+1 is the origin, which is empty
    projectively.
    """

    id: int
    rank: int
    forms: frozenset
    basis: tuple | None = None


@dataclass
class IntersectionLattice:
    n: int
    num_forms: int
    flats: list
    forms: list | None = field(default=None, repr=False)

    @property
    def top(self):
        return self.flats[0]

    def projective_dimension(self, x: Flat):
        return self.n - x.rank

    def projective_flats(self):
        """Flats that are nonempty in P^n, top (P^n itself) included."""
        return [x for x in self.flats if x.rank <= self.n]

    def proper_flats(self):
        return [x for x in self.projective_flats() if x.rank > 0]

    def contains(self, y: Flat, x: Flat):
        """True iff x is a subspace of y."""
        return y.forms <= x.forms

    def strictly_above(self, x: Flat):
        return [y for y in self.flats if y.id != x.id and self.contains(y, x)]

    def signature(self):
        return sorted((x.rank, tuple(sorted(x.forms))) for x in self.flats)

    def counts(self):
        """{projective dimension: number of flats}, excluding the top."""
        out = {}
        for x in self.proper_flats():
            d = self.projective_dimension(x)
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items(), reverse=True))

    def multiplicity(self, x: Flat):
        return len(x.forms)


@dataclass
class IndicatorCoefficients:
    values: dict  # flat id -> integer
    top: int = 1


def _form_vector(g: Poly):
    if g.is_zero() or g.total_degree() != 1 or not g.is_homogeneous():
        raise ValueError(f"{g} is not a nonzero linear form")
    v = [Fraction(0)] * g.nvars
    for e, c in g.terms.items():
        v[e.index(1)] = c
    return v


def _proportional(u, v):
    return linalg.rank([u, v], len(u)) < 2


def _in_span(basis, pivots, v):
    v = list(v)
    for row, p in zip(basis, pivots):
        c = v[p]
        if c:
            for j, a in row.items():
                v[j] -= c * a
    return not any(v)


def lattice_from_vectors(vectors, n, forms=None):
    """Build the central intersection lattice from coefficient vectors (proportional vectors allowed)."""
    ncols = n + 1
    k = len(vectors)
    top = (0, frozenset(), ())
    seen = {frozenset(): top}
    level = [top]
    while level:
        nxt = []
        for rank, closure, _ in level:
            for h in range(k):
                if h in closure:
                    continue
                gens = [vectors[i] for i in sorted(closure | {h})]
                basis, pivots = linalg.rref(gens, ncols)
                cl = frozenset(i for i in range(k) if _in_span(basis, pivots, vectors[i]))
                if cl in seen:
                    continue
                entry = (len(pivots), cl, tuple(tuple(sorted(r.items())) for r in basis))
                seen[cl] = entry
                nxt.append(entry)
        level = nxt
    entries = sorted(seen.values(), key=lambda t: (t[0], sorted(t[1])))
    flats = [Flat(i, r, cl, b) for i, (r, cl, b) in enumerate(entries)]
    return IntersectionLattice(n, k, flats, forms)


def intersection_lattice(forms, n) -> IntersectionLattice:
    """Intersection lattice of the arrangement of hyperplanes ``forms`` in P^n."""
    vectors = []
    for g in forms:
        if g.nvars != n + 1:
            raise ValueError(f"form {g} is not in {n + 1} variables")
        vectors.append(_form_vector(g))
    for i in range(len(vectors)):
        for j in range(i):
            if _proportional(vectors[i], vectors[j]):
                raise ValueError(f"forms {j} and {i} are proportional")
    return lattice_from_vectors(vectors, n, list(forms))


def mobius(L: IntersectionLattice):
    """mu(top, x) for every flat, by the top-down recursion."""
    mu = {}
    for x in L.flats:  # sorted by rank, so everything above x is already done
        if x.rank == 0:
            mu[x.id] = 1
        else:
            mu[x.id] = -sum(mu[y.id] for y in L.strictly_above(x))
    return mu


def indicator_coefficients(L: IntersectionLattice) -> IndicatorCoefficients:
    """Integers m_x with 1_U = sum over flats x of m_x * 1_x (top included, m_top = 1)."""
    mu = mobius(L)
    return IndicatorCoefficients({x.id: mu[x.id] for x in L.projective_flats()}, 1)


def characteristic_polynomial(L: IntersectionLattice):
    """chi(A, t) of the central arrangement, as integer coefficients from t^0 upward."""
    mu = mobius(L)
    dim = L.n + 1
    coeffs = [0] * (dim + 1)
    for x in L.flats:
        coeffs[dim - x.rank] += mu[x.id]
    return tuple(coeffs)


def format_polynomial(coeffs, var="t"):
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a}{mono}")
        sign = "-" if c < 0 else "+"
        parts.append(body if not parts and c > 0 else (f"-{body}" if not parts else f"{sign} {body}"))
    return " ".join(parts) if parts else "0"


def generic_section(L: IntersectionLattice) -> IntersectionLattice:
    """Lattice of the arrangement cut by a generic hyperplane (rank truncation).

    Flats of projective dimension >= 1 survive with dimension lowered by one,
    points are dropped, and everything of rank >= n collapses to the new origin.
    """
    if L.n < 2:
        raise ValueError("generic section needs n >= 2")
    kept = [(x.rank, x.forms) for x in L.flats if x.rank <= L.n - 1]
    if any(x.rank >= L.n for x in L.flats):
        kept.append((L.n, frozenset(range(L.num_forms))))
    kept.sort(key=lambda t: (t[0], sorted(t[1])))
    flats = [Flat(i, r, cl, None) for i, (r, cl) in enumerate(kept)]
    return IntersectionLattice(L.n - 1, L.num_forms, flats, None)


def eliminate(g: Poly, H: Poly, chart: int):
    """Restrict g to the hyperplane H = 0 by solving H for variable ``chart``.

    The result lives in the ring without that variable (one fewer variables).
    """
    c = H.coefficient(tuple(int(i == chart) for i in range(H.nvars)))
    if c == 0:
        raise ValueError(f"hyperplane {H} does not involve variable {chart}; cannot eliminate it")
    m = H.nvars - 1
    names = tuple(nm for i, nm in enumerate(H.names) if i != chart)
    images = []
    j = 0
    for i in range(H.nvars):
        if i == chart:
            expr = Poly.zero(m, names)
            for k in range(H.nvars):
                if k == chart:
                    continue
                a = H.coefficient(tuple(int(t == k) for t in range(H.nvars)))
                if a:
                    kk = k if k < chart else k - 1
                    expr = expr + Poly.var(kk, m, names) * (-a / c)
            images.append(expr)
        else:
            images.append(Poly.var(j, m, names))
            j += 1
    return g.substitute(images)


def restrict_forms(forms, H: Poly, chart: int | None = None):
    """Restrictions of ``forms`` to H, as linear forms in n variables (may be proportional or zero)."""
    if chart is None:
        chart = next(i for i in range(H.nvars) if H.coefficient(tuple(int(t == i) for t in range(H.nvars))))
    return [eliminate(g, H, chart) for g in forms]


def section_realizes_truncation(L: IntersectionLattice, H: Poly) -> bool:
    """Does the concrete hyperplane H realize the combinatorial generic section of L?"""
    restricted = restrict_forms(L.forms, H)
    if any(g.is_zero() for g in restricted):
        return False
    vectors = [_form_vector(g) for g in restricted]
    concrete = lattice_from_vectors(vectors, L.n - 1)
    return concrete.signature() == generic_section(L).signature()


def random_linear_form(rng, nvars, lo=-7, hi=7, names=None, nonzero=False):
    while True:
        coeffs = [rng.randint(lo, hi) for _ in range(nvars)]
        if nonzero and not all(coeffs):
            continue
        if any(coeffs):
            return Poly.linear_form(coeffs, names)


def random_arrangement(rng, k, n, lo=-3, hi=3):
    """k pairwise non-proportional random linear forms in n+1 variables."""
    forms, vectors = [], []
    while len(forms) < k:
        g = random_linear_form(rng, n + 1, lo, hi)
        v = _form_vector(g)
        if any(_proportional(v, u) for u in vectors):
            continue
        forms.append(g)
        vectors.append(v)
    return forms
