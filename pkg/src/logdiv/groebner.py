"""Buchberger's algorithm with the sugar strategy, normal forms and quotient dimensions.

Polynomials are handled internally as plain ``{exponent: Fraction}`` dicts;
the public surface takes and returns :class:`~logdiv.poly.Poly`.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ResourceLimitExceeded, NotIsolatedError
from .poly import ORDERS, Poly, monomials_of_degree

DEFAULT_MAX_STEPS = 10**6


_default_order = ["grevlex"]


@contextmanager
def use_order(order):
    """Temporarily change the monomial order used when none is passed explicitly."""
    if order not in ORDERS:
        raise ValueError(f"unknown monomial order {order!r}")
    _default_order.append(order)
    try:
        yield
    finally:
        _default_order.pop()


def current_order():
    return _default_order[-1]


def default_max_steps():
    env = os.environ.get("LOGDIV_MAX_STEPS")
    return int(env) if env else DEFAULT_MAX_STEPS


class Ideal:
    """An ideal of Q[x0..x{n-1}] given by generators (zero generators dropped)."""

    def __init__(self, generators, nvars=None):
        generators = list(generators)
        if nvars is None:
            if not generators:
                raise ValueError("nvars is required for an empty generator list")
            nvars = generators[0].nvars
        for g in generators:
            if g.nvars != nvars:
                raise ValueError("generators must share the ambient variable list")
        self.nvars = nvars
        self.generators = tuple(g for g in generators if not g.is_zero())

    def __add__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.generators + other.generators, self.nvars)
        return Ideal(self.generators + tuple(other), self.nvars)

    def __repr__(self):
        return f"Ideal([{', '.join(str(g) for g in self.generators)}])"


@dataclass(frozen=True)
class GroebnerBasis:
    basis: tuple
    order: str
    nvars: int

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.basis]

    def is_unit(self):
        return any(g.is_constant() for g in self.basis)

    def reduce(self, g: Poly) -> Poly:
        key = ORDERS[self.order]
        G = [(b.leading_monomial(self.order), b.terms) for b in self.basis]
        r, _ = _full_reduce(dict(g.terms), 0, [(lm, t, 0) for lm, t in G], key)
        return Poly(r, g.nvars, g.names)

    def contains(self, g: Poly) -> bool:
        return self.reduce(g).is_zero()


@dataclass(frozen=True)
class QuotientDimension:
    """Dimension of Q[x]/I; ``dimension`` is None when infinite."""

    dimension: int | None
    standard_monomials: tuple | None
    origin_supported: bool | None

    @property
    def finite(self):
        return self.dimension is not None


# -- monomial helpers ---------------------------------------------------------


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def _sub_multiple(p, g, shift, c):
    """p -= c * x^shift * g  (in place)."""
    for e, gc in g.items():
        m = tuple(a + b for a, b in zip(e, shift))
        v = p.get(m, 0) - c * gc
        if v:
            p[m] = v
        else:
            p.pop(m, None)


def _full_reduce(p, sugar, G, key, steps=None):
    """Fully reduce p by G = [(lm, terms, sugar)]; returns (remainder, sugar)."""
    r = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, g, gs in G:
            if _divides(lm, m):
                shift = _sub(m, lm)
                _sub_multiple(p, g, shift, c)
                sugar = max(sugar, gs + sum(shift))
                break
        else:
            r[m] = c
            del p[m]
    return r, sugar


def _monic(p, key):
    if not p:
        return p
    lc = p[max(p, key=key)]
    if lc == 1:
        return p
    inv = 1 / lc
    return {e: c * inv for e, c in p.items()}


def _spoly(f, lmf, g, lmg):
    L = _lcm(lmf, lmg)
    s = {}
    for e, c in f.items():
        s[tuple(a + b for a, b in zip(e, _sub(L, lmf)))] = c
    _sub_multiple(s, g, _sub(L, lmg), Fraction(1))
    return s


def _buchberger(gens, nvars, order, max_steps):
    key = ORDERS[order]
    G = []  # list of [lm, terms, sugar]
    pairs = {}  # (i, j) -> (sugar, lcm)
    steps = 0

    def add(h, sugar):
        k = len(G)
        lmh = max(h, key=key)
        G.append((lmh, h, sugar))
        new = {}
        for i in range(k):
            lmi = G[i][0]
            L = _lcm(lmi, lmh)
            s = max(G[i][2] + sum(_sub(L, lmi)), sugar + sum(_sub(L, lmh)))
            new[i] = (L, s, _coprime(lmi, lmh))
        # Gebauer-Moeller: drop new pairs whose lcm is a proper multiple of another new lcm.
        keep = {}
        for i, (L, s, cop) in new.items():
            if any(L != L2 and _divides(L2, L) for (L2, _, _) in new.values()):
                continue
            keep[i] = (L, s, cop)
        by_lcm = {}
        for i, (L, s, cop) in sorted(keep.items()):
            by_lcm.setdefault(L, []).append((i, s, cop))
        chosen = {}
        for L, group in by_lcm.items():
            if any(cop for _, _, cop in group):
                continue
            i, s, _ = group[0]
            chosen[(i, k)] = (s, L)
        # chain criterion on old pairs
        for (i, j), (s, L) in list(pairs.items()):
            if _divides(lmh, L) and _lcm(G[i][0], lmh) != L and _lcm(G[j][0], lmh) != L:
                del pairs[(i, j)]
        pairs.update(chosen)

    for f in gens:
        h, s = _full_reduce(dict(f), max(sum(e) for e in f), G, key)
        if h:
            add(_monic(h, key), s)

    while pairs:
        (i, j), (s, L) = min(pairs.items(), key=lambda kv: (kv[1][0], key(kv[1][1]), kv[0]))
        del pairs[(i, j)]
        steps += 1
        if steps > max_steps:
            raise ResourceLimitExceeded(f"Groebner computation exceeded {max_steps} S-pair reductions")
        sp = _spoly(G[i][1], G[i][0], G[j][1], G[j][0])
        h, hs = _full_reduce(sp, s, G, key)
        if h:
            add(_monic(h, key), hs)

    # minimal, then reduced basis
    lms = [g[0] for g in G]
    minimal = []
    for idx, (lm, g, s) in enumerate(G):
        redundant = False
        for jdx, lm2 in enumerate(lms):
            if jdx == idx or not _divides(lm2, lm):
                continue
            if lm2 != lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            minimal.append((lm, g, s))
    reduced = []
    for idx, (lm, g, s) in enumerate(minimal):
        others = [t for jdx, t in enumerate(minimal) if jdx != idx]
        r, _ = _full_reduce(dict(g), s, others, key)
        reduced.append(_monic(r, key))
    reduced.sort(key=lambda p: key(max(p, key=key)), reverse=True)
    return reduced


@lru_cache(maxsize=512)
def _cached_basis(gens, nvars, order, max_steps):
    raw = _buchberger([g.terms for g in gens], nvars, order, max_steps)
    names = gens[0].names if gens else None
    return tuple(Poly(p, nvars, names) for p in raw)


def groebner_basis(I: Ideal, order: str | None = None, max_steps: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``I``.

    Raises ResourceLimitExceeded when more than ``max_steps`` S-pairs are
    reduced (default from ``LOGDIV_MAX_STEPS`` or 10**6).
    """
    order = order or current_order()
    if order not in ORDERS:
        raise ValueError(f"unknown monomial order {order!r}")
    if max_steps is None:
        max_steps = default_max_steps()
    gens = tuple(sorted(I.generators, key=lambda g: sorted(g.terms.items())))
    return GroebnerBasis(_cached_basis(gens, I.nvars, order, max_steps), order, I.nvars)


def normal_form(g: Poly, I: Ideal, order: str | None = None) -> Poly:
    return groebner_basis(I, order).reduce(g)


def ideal_membership(g: Poly, I: Ideal, order: str | None = None) -> bool:
    if g.nvars != I.nvars:
        raise ValueError("polynomial and ideal live in different rings")
    if g.is_zero():
        return True
    return groebner_basis(I, order).contains(g)


def ideal_equal(I: Ideal, J: Ideal, order: str | None = None) -> bool:
    if I.nvars != J.nvars:
        raise ValueError("ideals live in different rings")
    return all(ideal_membership(g, J, order) for g in I.generators) and all(
        ideal_membership(g, I, order) for g in J.generators
    )


def _standard_monomials(lms, nvars):
    start = (0,) * nvars
    if any(_divides(lm, start) for lm in lms):
        return ()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(nvars):
                e = list(m)
                e[i] += 1
                e = tuple(e)
                if e in seen or any(_divides(lm, e) for lm in lms):
                    continue
                seen.add(e)
                nxt.append(e)
        frontier = nxt
    return tuple(sorted(seen, key=ORDERS["grevlex"]))


def quotient_dimension(I: Ideal, order: str | None = None) -> QuotientDimension:
    """dim_Q Q[x]/I with its standard monomials, plus whether V(I) is inside the origin."""
    n = I.nvars
    if not I.generators:
        return QuotientDimension(None, None, n == 0)
    G = groebner_basis(I, order)
    lms = G.leading_monomials()
    if G.is_unit():
        return QuotientDimension(0, (), True)
    for i in range(n):
        if not any(lm[i] and sum(lm) == lm[i] for lm in lms):
            origin = _origin_test(G, n, bound=None)
            return QuotientDimension(None, None, origin)
    std = _standard_monomials(lms, n)
    return QuotientDimension(len(std), std, _origin_test(G, n, bound=len(std)))


def _origin_test(G, n, bound):
    """Is x_i^bound in I for every i?  ``None`` bound means positive dimensional."""
    if bound is None:
        return False
    for i in range(n):
        e = [0] * n
        e[i] = bound
        if not G.contains(Poly.monomial(e, 1, G.basis[0].names)):
            return False
    return True


def maximal_ideal_power(nvars, k, point=None, names=None):
    """Generators of m_p^k for p = point (origin by default)."""
    gens = [Poly.var(i, nvars, names) for i in range(nvars)]
    if point is not None:
        gens = [g - Fraction(a) for g, a in zip(gens, point)]
    out = []
    for e in monomials_of_degree(nvars, k):
        m = Poly.constant(1, nvars, names)
        for i, a in enumerate(e):
            if a:
                m = m * gens[i] ** a
        out.append(m)
    return out


def local_quotient_dimension(I: Ideal, max_power: int = 64, order: str | None = None) -> int:
    """Length of the local ring O_0/I O_0 at the origin.

    Uses dim Q[x]/(I + m^k), which is supported at the origin only and
    stabilises exactly when m^k is contained in I locally.  Raises
    NotIsolatedError if no stabilisation happens up to ``max_power``.
    """
    n = I.nvars

    def length(k):
        J = I + maximal_ideal_power(n, k)
        return quotient_dimension(J, order).dimension

    if length(1) == 0:
        return 0
    k = 1
    while k <= max_power:
        a, b = length(k), length(k + 1)
        if a == b:
            return a
        # equal consecutive lengths happen only once stable, so skipping ahead is safe
        k = max(k + 1, min(b, 2 * k))
    raise NotIsolatedError(f"local quotient did not stabilise up to m^{max_power}")
