"""Arithmetic in A_*(P^n) = Z[h]/(h^{n+1}) and Chern classes built from exponents."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


@dataclass(frozen=True)
class ChowClass:
    """sum_j coeffs[j] * h^j cap [P^n]; coeffs[j] multiplies [P^{n-j}]."""

    n: int
    coeffs: tuple

    def __post_init__(self):
        c = tuple(Fraction(a) for a in self.coeffs)
        if len(c) != self.n + 1:
            raise ValueError(f"a class on P^{self.n} needs {self.n + 1} coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def one(cls, n):
        return cls(n, (1,) + (0,) * n)

    @classmethod
    def h(cls, n):
        if n < 1:
            return cls(n, (0,))
        return cls(n, (0, 1) + (0,) * (n - 1))

    @classmethod
    def from_poly(cls, n, coeffs):
        """Truncate a coefficient list (low degree first) to P^n."""
        c = list(coeffs[: n + 1]) + [0] * max(0, n + 1 - len(coeffs))
        return cls(n, c)

    def _check(self, other):
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: P^{self.n} vs P^{other.n}")

    def __add__(self, other):
        self._check(other)
        return ChowClass(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return ChowClass(self.n, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return ChowClass(self.n, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.n, [a * other for a in self.coeffs])
        return mul(self, other)

    __rmul__ = __mul__

    def inverse(self):
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("class with zero degree-0 part is not invertible")
        inv = [Fraction(0)] * (self.n + 1)
        inv[0] = 1 / self.coeffs[0]
        for k in range(1, self.n + 1):
            s = sum(self.coeffs[j] * inv[k - j] for j in range(1, k + 1))
            inv[k] = -s / self.coeffs[0]
        return ChowClass(self.n, inv)

    def is_integral(self):
        return all(a.denominator == 1 for a in self.coeffs)

    def integer_coeffs(self):
        if not self.is_integral():
            raise ValueError(f"class {self} has non-integral coefficients")
        return [int(a) for a in self.coeffs]

    def degrees(self):
        return degrees(self)

    def to_json(self):
        return [int(a) if a.denominator == 1 else str(a) for a in self.coeffs]

    def __str__(self):
        parts = []
        for j, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mono = "" if j == 0 else ("h" if j == 1 else f"h^{j}")
            mag = abs(a)
            txt = str(mag) if (not mono or mag != 1) else ""
            body = (f"{txt} {mono}".strip()) if mono else txt
            if not parts:
                parts.append(("-" if a < 0 else "") + body)
            else:
                parts.append(("- " if a < 0 else "+ ") + body)
        return " ".join(parts) if parts else "0"


def mul(a: ChowClass, b: ChowClass) -> ChowClass:
    a._check(b)
    n = a.n
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j in range(n + 1 - i):
                out[i + j] += x * b.coeffs[j]
    return ChowClass(n, out)


def degrees(a: ChowClass):
    """(d_0, ..., d_n) with d_i = integral of h^i cap a = coeffs[n - i]."""
    return tuple(a.coeffs[a.n - i] for i in range(a.n + 1))


def degree(a: ChowClass, i: int):
    return a.coeffs[a.n - i] if 0 <= i <= a.n else Fraction(0)


def chern_tangent(n: int) -> ChowClass:
    if n < 0:
        raise ValueError("n must be non-negative")
    return ChowClass(n, [comb(n + 1, j) for j in range(n + 1)])


def line_bundle(n: int, k: int) -> ChowClass:
    """c(O(k)) = 1 + k h."""
    return ChowClass.from_poly(n, [1, k])


def chern_logderiv_from_exponents(exps, n: int) -> ChowClass:
    """c(Der(-log D)) cap [P^n] for a free divisor with cone exponents ``exps``.

    The cone module with exponents {1, d_1..d_n} sheafifies to
    Der(-log D) + O after splitting off the Euler field, giving
    prod (1 + (1 - d_i) h).  The Euler factor itself contributes 1, so the
    product is taken over the whole multiset; this also covers the empty
    divisor, whose exponents are all 0 and whose class is (1 + h)^{n+1}.
    """
    exps = sorted(int(e) for e in exps)
    if len(exps) != n + 1 or any(e < 0 for e in exps):
        raise ValueError(f"need {n + 1} non-negative exponents on P^{n}, got {exps}")
    if 1 not in exps and 0 not in exps:
        raise ValueError(f"exponents {exps} contain neither the Euler degree 1 nor a trivial factor 0")
    c = ChowClass.one(n)
    for d in exps:
        c = c * line_bundle(n, 1 - d)
    return c


def chern_logderiv_curve(k: int, n: int = 1) -> ChowClass:
    """c(TP^1) c(O(k))^{-1} for k points on P^1."""
    if n != 1:
        raise ValueError("the curve case is P^1 only")
    if k < 0:
        raise ValueError("number of points must be non-negative")
    return chern_tangent(1) * line_bundle(1, k).inverse()
