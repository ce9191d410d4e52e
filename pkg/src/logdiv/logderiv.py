"""Graded modules of logarithmic derivations, Saito's criterion and exponents."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from . import linalg
from .errors import Inconclusive, NonLogarithmicError, NotReducedError
from .groebner import Ideal, ideal_membership
from .poly import Poly, is_squarefree, linear_factors, monomials_of_degree, monomials_up_to_degree, product


@dataclass(frozen=True)
class Derivation:
    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        n = {c.nvars for c in self.coefficients}
        if len(n) != 1 or n.pop() != len(self.coefficients):
            raise ValueError("a derivation needs one coefficient per variable")

    @property
    def nvars(self):
        return len(self.coefficients)

    @property
    def degree(self):
        """Common polynomial degree of the coefficients (-1 for the zero field)."""
        degs = {c.total_degree() for c in self.coefficients if not c.is_zero()}
        if not degs:
            return -1
        if len(degs) > 1 or not all(c.is_homogeneous() for c in self.coefficients):
            raise ValueError("derivation is not homogeneous")
        return degs.pop()

    @classmethod
    def euler(cls, nvars, names=None):
        return cls([Poly.var(i, nvars, names) for i in range(nvars)])

    @classmethod
    def partial(cls, i, nvars, names=None):
        return cls([Poly.constant(int(j == i), nvars, names) for j in range(nvars)])

    def __mul__(self, p):
        return Derivation([p * c for c in self.coefficients])

    __rmul__ = __mul__

    def __add__(self, other):
        return Derivation([a + b for a, b in zip(self.coefficients, other.coefficients)])

    def evaluate(self, point):
        return [c.evaluate(point) for c in self.coefficients]

    def __str__(self):
        names = self.coefficients[0].names
        parts = []
        for c, name in zip(self.coefficients, names):
            if c.is_zero():
                continue
            s = str(c)
            if len(c.terms) > 1:
                s = f"({s})"
            parts.append(f"{s}*d{name}" if s != "1" else f"d{name}")
        return " + ".join(parts) if parts else "0"


def apply(theta: Derivation, f: Poly) -> Poly:
    if theta.nvars != f.nvars:
        raise ValueError("derivation and polynomial have different variable counts")
    out = Poly.zero(f.nvars, f.names)
    for i, a in enumerate(theta.coefficients):
        if not a.is_zero():
            out = out + a * f.diff(i)
    return out


@dataclass
class DivisorSpec:
    """A divisor in P^n given by a reduced homogeneous polynomial in n+1 variables."""

    n: int
    f: Poly
    arrangement_forms: list | None = None
    name: str = ""
    singular_points: list = field(default_factory=list)

    def __post_init__(self):
        if self.f.nvars != self.n + 1:
            raise ValueError(f"P^{self.n} needs {self.n + 1} variables, got {self.f.nvars}")
        if self.f.is_zero():
            raise ValueError("zero polynomial does not define a divisor")
        if not self.f.is_homogeneous():
            raise ValueError("divisor equation must be homogeneous")
        if self.arrangement_forms is not None:
            forms = self.arrangement_forms
            for g in forms:
                if g.total_degree() != 1 or not g.is_homogeneous():
                    raise ValueError(f"arrangement form {g} is not a nonzero linear form")
            prod = product(forms, self.n + 1, self.f.names)
            e, c = self.f.leading_term()
            if prod.coefficient(e) == 0 or prod * (c / prod.coefficient(e)) != self.f:
                raise ValueError("product of arrangement forms does not equal f up to a scalar")

    @classmethod
    def from_arrangement(cls, forms, n, name=""):
        forms = list(forms)
        f = product(forms, n + 1, forms[0].names if forms else None)
        return cls(n, f, forms, name)

    @classmethod
    def empty(cls, n, name="empty"):
        return cls(n, Poly.constant(1, n + 1), [], name)

    @property
    def degree(self):
        return self.f.total_degree()

    def is_reduced(self):
        return is_squarefree(self.f)

    def check_reduced(self):
        if not self.is_reduced():
            raise NotReducedError(f"{self.name or self.f} is not reduced")

    def recognize_arrangement(self):
        """Fill ``arrangement_forms`` when f factors into distinct linear forms."""
        if self.arrangement_forms is None:
            forms = linear_factors(self.f)
            if forms is not None:
                self.arrangement_forms = forms
        return self.arrangement_forms is not None


@dataclass
class FreenessCertificate:
    is_free: bool
    basis: list | None = None
    exponents: tuple | None = None
    saito_scalar: Fraction | None = None
    determinant: Poly | None = None


@dataclass(frozen=True)
class NotFree:
    generator_count: int
    reason: str = ""


# -- degreewise solver ---------------------------------------------------------


def _vector_to_derivation(vec, monos, nvars, names):
    k = len(monos)
    coeffs = []
    for i in range(nvars):
        terms = {m: vec[i * k + j] for j, m in enumerate(monos) if vec[i * k + j]}
        coeffs.append(Poly(terms, nvars, names))
    return Derivation(coeffs)


def _derivation_to_vector(theta, monos):
    index = {m: j for j, m in enumerate(monos)}
    k = len(monos)
    v = {}
    for i, c in enumerate(theta.coefficients):
        for e, a in c.terms.items():
            v[i * k + index[e]] = a
    return v


def logderivations_of_degree(f: Poly, d: int):
    """Basis of {theta homogeneous of degree d : theta f in (f)} by exact linear algebra.

    Unknowns are the coefficients of a_0..a_n (degree d) and of the
    cofactor b (degree d - 1) in sum a_i df/dx_i - b f = 0.
    """
    n1 = f.nvars
    monos = monomials_of_degree(n1, d)
    bmonos = monomials_of_degree(n1, d - 1) if not f.is_constant() else []
    partials = f.gradient()
    columns = []
    for i in range(n1):
        for m in monos:
            columns.append(partials[i].mul_monomial(m).terms)
    for m in bmonos:
        columns.append((f.mul_monomial(m) * -1).terms)
    rows_index = {}
    rows = []
    for j, col in enumerate(columns):
        for e, c in col.items():
            if e not in rows_index:
                rows_index[e] = len(rows)
                rows.append({})
            rows[rows_index[e]][j] = c
    null = linalg.nullspace(rows, len(columns))
    na = n1 * len(monos)
    return [_vector_to_derivation(v[:na], monos, n1, f.names) for v in null]


def _normalize(theta):
    """Scale so the first nonzero coefficient has leading coefficient 1."""
    for c in theta.coefficients:
        if not c.is_zero():
            return theta * Poly.constant(1 / c.leading_coefficient(), theta.nvars, c.names)
    return theta


def logderiv_generators(D: DivisorSpec, degree_bound: int | None = None, stop_when_free=False):
    """Minimal homogeneous generators of D(f) = {theta : theta f in (f)} up to ``degree_bound``.

    Returns ``(generators, complete)``.  ``complete`` is True when the
    generators form a Saito basis, hence generate the whole module;
    ``stop_when_free`` ends the search as soon as that happens.
    """
    f = D.f
    n1 = f.nvars
    if degree_bound is None:
        degree_bound = max(D.degree, 1)
    gens = []
    for d in range(0, degree_bound + 1):
        monos = monomials_of_degree(n1, d)
        sol = logderivations_of_degree(f, d)
        if not sol:
            continue
        redundant = []
        for g in gens:
            for m in monomials_of_degree(n1, d - g.degree):
                redundant.append(_derivation_to_vector(g * Poly.monomial(m, 1, f.names), monos))
        span = linalg.EchelonBasis(redundant, n1 * len(monos))
        for theta in sol:
            if span.add(_derivation_to_vector(theta, monos)):
                gens.append(_normalize(theta))
        if stop_when_free and len(gens) == n1 and saito_check(gens, D, verify_logarithmic=False).is_free:
            return gens, True
    if len(gens) == n1 and saito_check(gens, D, verify_logarithmic=False).is_free:
        return gens, True
    return gens, False


def bounded_logderivations(f: Poly, degree_bound: int):
    """All (not necessarily homogeneous) log derivations with coefficients of degree <= bound."""
    n1 = f.nvars
    monos = monomials_up_to_degree(n1, degree_bound)
    bmonos = monomials_up_to_degree(n1, degree_bound - 1) if not f.is_constant() else []
    partials = f.gradient()
    columns = [partials[i].mul_monomial(m).terms for i in range(n1) for m in monos]
    columns += [(f.mul_monomial(m) * -1).terms for m in bmonos]
    rows_index, rows = {}, []
    for j, col in enumerate(columns):
        for e, c in col.items():
            if e not in rows_index:
                rows_index[e] = len(rows)
                rows.append({})
            rows[rows_index[e]][j] = c
    null = linalg.nullspace(rows, len(columns))
    na = n1 * len(monos)
    return [_vector_to_derivation(v[:na], monos, n1, f.names) for v in null]


# -- Saito's criterion ---------------------------------------------------------


def _sign(perm):
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def poly_determinant(matrix):
    """Leibniz expansion; fine for the (n+1) x (n+1) matrices used here (n <= 4)."""
    size = len(matrix)
    nvars = matrix[0][0].nvars
    names = matrix[0][0].names
    total = Poly.zero(nvars, names)
    for perm in permutations(range(size)):
        term = Poly.constant(_sign(perm), nvars, names)
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
            if term.is_zero():
                break
        total = total + term
    return total


def saito_check(candidates, D: DivisorSpec, verify_logarithmic=True) -> FreenessCertificate:
    f = D.f
    if len(candidates) != f.nvars:
        raise ValueError(f"Saito's criterion needs {f.nvars} derivations, got {len(candidates)}")
    if verify_logarithmic:
        principal = Ideal([f])
        for i, theta in enumerate(candidates):
            if not ideal_membership(apply(theta, f), principal):
                raise NonLogarithmicError(i)
    det = poly_determinant([list(t.coefficients) for t in candidates])
    if det.is_zero():
        return FreenessCertificate(False, determinant=det)
    e, c = f.leading_term()
    ratio = det.coefficient(e) / c
    if ratio == 0 or det != f * ratio:
        return FreenessCertificate(False, determinant=det)
    exps = tuple(sorted(t.degree for t in candidates))
    return FreenessCertificate(True, list(candidates), exps, ratio, det)


def exponents(D: DivisorSpec, degree_bound: int | None = None):
    """Exponents of a free divisor (sorted tuple) or a NotFree record.

    Raises Inconclusive when the bound is below deg f and no Saito basis
    has been found yet.
    """
    if degree_bound is None:
        degree_bound = max(D.degree, 1)
    gens, complete = logderiv_generators(D, degree_bound, stop_when_free=True)
    n1 = D.f.nvars
    if complete:
        cert = saito_check(gens, D, verify_logarithmic=False)
        return cert.exponents
    if len(gens) > n1:
        return NotFree(len(gens), f"{len(gens)} minimal generators, more than {n1}")
    if degree_bound < D.degree:
        raise Inconclusive(
            f"only {len(gens)} minimal generators up to degree {degree_bound} < deg f = {D.degree}"
        )
    if len(gens) < n1:
        return NotFree(len(gens), f"only {len(gens)} minimal generators up to degree {degree_bound}")
    return NotFree(len(gens), "Saito determinant is not a nonzero multiple of f")


def freeness_certificate(D: DivisorSpec, degree_bound: int | None = None) -> FreenessCertificate:
    gens, complete = logderiv_generators(D, degree_bound, stop_when_free=True)
    if complete:
        return saito_check(gens, D, verify_logarithmic=False)
    return FreenessCertificate(False, basis=None)
