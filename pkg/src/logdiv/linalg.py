"""Exact linear algebra over Q, backed by sympy's sparse DomainMatrix."""

from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _q(c):
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def _f(q):
    return Fraction(int(q.numerator), int(q.denominator))


def sparse_matrix(rows, ncols):
    """Build a DomainMatrix from a list of rows, each a dict {col: value} or a list."""
    data = {}
    for i, row in enumerate(rows):
        items = row.items() if isinstance(row, dict) else enumerate(row)
        r = {j: _q(v) for j, v in items if v}
        if r:
            data[i] = r
    return DomainMatrix(data, (len(rows), ncols), QQ)


def rank(rows, ncols):
    if not rows or ncols == 0:
        return 0
    return sparse_matrix(rows, ncols).rank()


def rref(rows, ncols):
    """Return (nonzero rows of the reduced echelon form as dicts, pivot columns)."""
    if not rows:
        return [], ()
    m, pivots = sparse_matrix(rows, ncols).rref()
    rep = m.to_sparse().rep
    out = []
    for i in range(len(pivots)):
        out.append({j: _f(v) for j, v in rep.get(i, {}).items()})
    return out, tuple(pivots)


def nullspace(rows, ncols):
    """Basis of {v : M v = 0} as dense Fraction lists, in reduced echelon form."""
    if ncols == 0:
        return []
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row.get(fc, Fraction(0))
        basis.append(v)
    return basis


def solve(rows, ncols, rhs):
    """Return one solution x of M x = rhs (dense Fraction list) or None."""
    aug = []
    for row, b in zip(rows, rhs):
        r = dict(row) if isinstance(row, dict) else {j: v for j, v in enumerate(row) if v}
        if b:
            r[ncols] = b
        aug.append(r)
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row.get(ncols, Fraction(0))
    return x


class EchelonBasis:
    """Reduced row echelon basis grown one vector at a time (sparse Fraction rows)."""

    def __init__(self, rows=(), ncols=0):
        self.rows = {}  # pivot column -> row with a 1 at the pivot
        rows = list(rows)
        if rows:
            red, pivots = rref(rows, ncols)
            self.rows = dict(zip(pivots, red))

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, v):
        v = {j: Fraction(a) for j, a in (v.items() if isinstance(v, dict) else enumerate(v)) if a}
        for p, row in self.rows.items():
            c = v.get(p)
            if c:
                for j, a in row.items():
                    x = v.get(j, 0) - c * a
                    if x:
                        v[j] = x
                    else:
                        v.pop(j, None)
        return v

    def add(self, v):
        """Insert v; returns False when v already lies in the span."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {j: a * inv for j, a in r.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                for j, a in r.items():
                    x = row.get(j, 0) - c * a
                    if x:
                        row[j] = x
                    else:
                        row.pop(j, None)
        self.rows[p] = r
        return True
