"""Sparse multivariate polynomials over Q.

A ``Poly`` maps exponent tuples to ``Fraction`` coefficients.  Values are
treated as immutable; every operation returns a new polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import PolySyntaxError, UnknownVariableError

ALIASES = ("x", "y", "z", "w")


def grevlex_key(e):
    return (sum(e), tuple(-a for a in reversed(e)))


def lex_key(e):
    return tuple(e)


ORDERS = {"grevlex": grevlex_key, "lex": lex_key}


def default_names(nvars):
    return tuple(f"x{i}" for i in range(nvars))


def monomials_of_degree(nvars, d):
    """All exponent vectors of total degree ``d``, in descending grevlex order."""
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=grevlex_key, reverse=True)
    return out


def monomials_up_to_degree(nvars, d):
    out = []
    for k in range(d, -1, -1):
        out.extend(monomials_of_degree(nvars, k))
    return out


class Poly:
    __slots__ = ("nvars", "terms", "names", "_hash")

    def __init__(self, terms=None, nvars=0, names=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(a) for a in e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have length {nvars}")
                c = Fraction(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
                    if not clean[e]:
                        del clean[e]
        self.nvars = nvars
        self.terms = clean
        self.names = tuple(names) if names is not None else default_names(nvars)
        if len(self.names) != nvars:
            raise ValueError("number of names does not match nvars")
        self._hash = None

    @classmethod
    def _raw(cls, terms, nvars, names):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p.names = names
        p._hash = None
        return p

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, nvars, names=None):
        return cls({}, nvars, names)

    @classmethod
    def constant(cls, c, nvars, names=None):
        return cls({(0,) * nvars: c}, nvars, names)

    @classmethod
    def var(cls, i, nvars, names=None):
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars, names)

    @classmethod
    def monomial(cls, exp, coeff=1, names=None):
        return cls({tuple(exp): coeff}, len(exp), names)

    @classmethod
    def linear_form(cls, coeffs, names=None):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(terms, n, names)

    def gens(self):
        return [Poly.var(i, self.nvars, self.names) for i in range(self.nvars)]

    # -- basic queries --------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), Fraction(0))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d):
        return Poly._raw({e: c for e, c in self.terms.items() if sum(e) == d}, self.nvars, self.names)

    def variables_used(self):
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def sorted_terms(self, order="grevlex"):
        key = ORDERS[order]
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order="grevlex"):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = ORDERS[order]
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def leading_monomial(self, order="grevlex"):
        return self.leading_term(order)[0]

    def leading_coefficient(self, order="grevlex"):
        return self.leading_term(order)[1]

    def monic(self, order="grevlex"):
        if not self.terms:
            return self
        return self * (1 / self.leading_coefficient(order))

    def with_names(self, names):
        return Poly._raw(self.terms, self.nvars, tuple(names))

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other, self.nvars, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return Poly._raw(t, self.nvars, self.names)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.nvars, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = Fraction(other)
            if not c0:
                return Poly.zero(self.nvars, self.names)
            return Poly._raw({e: c * c0 for e, c in self.terms.items()}, self.nvars, self.names)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = t.get(e, 0) + c1 * c2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        return Poly._raw(t, self.nvars, self.names)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.constant(1, self.nvars, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, exp, coeff=1):
        coeff = Fraction(coeff)
        return Poly._raw(
            {tuple(a + b for a, b in zip(e, exp)): c * coeff for e, c in self.terms.items()},
            self.nvars,
            self.names,
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and evaluation ----------------------------------------
    def diff(self, i):
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                t[tuple(e2)] = c * e[i]
        return Poly._raw(t, self.nvars, self.names)

    def gradient(self):
        return [self.diff(i) for i in range(self.nvars)]

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ValueError("point dimension does not match nvars")
        pt = [Fraction(a) for a in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for a, k in zip(pt, e):
                if k:
                    v *= a ** k
            total += v
        return total

    def substitute(self, images):
        """Compose with ``images`` (one Poly per variable, all in a common ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        if not images:
            raise ValueError("cannot substitute into a polynomial in no variables")
        target = images[0]
        result = Poly.zero(target.nvars, target.names)
        powers = [dict() for _ in images]

        def power(i, k):
            if k not in powers[i]:
                powers[i][k] = images[i] ** k
            return powers[i][k]

        for e, c in self.terms.items():
            term = Poly.constant(c, target.nvars, target.names)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def translate(self, point):
        """Return g(x) = f(x + point)."""
        gens = self.gens()
        return self.substitute([g + Fraction(a) for g, a in zip(gens, point)])

    # -- rendering ------------------------------------------------------
    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Poly({render(self)!r}, nvars={self.nvars})"


def _format_coeff(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render(f, names=None):
    names = tuple(names) if names is not None else f.names
    if not f.terms:
        return "0"
    parts = []
    for e, c in f.sorted_terms("grevlex"):
        mono = "*".join(
            names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
        )
        a = abs(c)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[start]!r}", text, start)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def _variable_table(names):
    table = {name: i for i, name in enumerate(names)}
    if len(names) <= len(ALIASES):
        for i in range(len(names)):
            table.setdefault(ALIASES[i], i)
            table.setdefault(f"x{i}", i)
    return table


class _Parser:
    def __init__(self, text, names):
        self.text = text
        self.names = tuple(names)
        self.nvars = len(names)
        self.table = _variable_table(self.names)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(message, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            q = self.unary()
            if tok[1] == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    self.error("division is only allowed by a nonzero constant", tok)
                p = p * (1 / q.constant_term())
        return p

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            p = self.unary()
            return -p if tok[1] == "-" else p
        return self.power()

    def power(self):
        p = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a non-negative integer", tok)
            p = p ** tok[1]
        return p

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            return Poly.constant(val, self.nvars, self.names)
        if kind == "name":
            if val not in self.table:
                raise UnknownVariableError(
                    f"unknown variable {val!r} at position {pos}; expected one of {list(self.names)}"
                )
            return Poly.var(self.table[val], self.nvars, self.names)
        if kind == "op" and val == "(":
            p = self.expr()
            close = self.take()
            if close[0] != "op" or close[1] != ")":
                self.error("expected ')'", close)
            return p
        self.error(f"unexpected token {val!r}" if kind != "end" else "unexpected end of input", tok)


def parse_poly(text: str, vars: Sequence[str] | int) -> Poly:
    """Parse ``text`` into a Poly over the given variable names.

    ``vars`` may also be an integer, meaning ``x0..x{n-1}``.  Variables
    ``x, y, z, w`` are accepted as aliases of ``x0..x3`` when there are at
    most four variables.
    """
    names = default_names(vars) if isinstance(vars, int) else tuple(vars)
    return _Parser(text, names).parse()


# -- weights ----------------------------------------------------------------


@dataclass(frozen=True)
class WeightVector:
    weights: tuple
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(a) for a in self.weights))
        if any(a <= 0 for a in self.weights):
            raise ValueError("weights must be strictly positive")

    def weighted_degree(self, exp):
        return sum(a * e for a, e in zip(self.weights, exp))


def _check_weights(f, w):
    if f.is_zero():
        raise ValueError("zero polynomial")
    if len(w.weights) != f.nvars:
        raise ValueError("weight vector length does not match the number of variables")


def is_quasihomogeneous(f: Poly, w: WeightVector) -> bool:
    _check_weights(f, w)
    return all(w.weighted_degree(e) == w.degree for e in f.terms)


def euler_pairing_check(f: Poly, w: WeightVector) -> bool:
    """True iff d*f equals the weighted Euler field applied to f."""
    _check_weights(f, w)
    gens = f.gens()
    euler = Poly.zero(f.nvars, f.names)
    for i, a in enumerate(w.weights):
        euler = euler + gens[i] * f.diff(i) * a
    return euler == f * w.degree


# -- sympy bridge (squarefree tests and linear factor recognition) ----------


def to_sympy(f: Poly):
    import sympy

    gens = sympy.symbols(f"_v0:{f.nvars}") if f.nvars else ()
    return sympy.Poly.from_dict(
        {e: sympy.Rational(c.numerator, c.denominator) for e, c in f.terms.items()} or {(0,) * f.nvars: 0},
        *gens,
        domain="QQ",
    )


def from_sympy(p, names):
    return Poly(
        {tuple(e): Fraction(int(c.p), int(c.q)) for e, c in p.terms()}, len(names), names
    )


def is_squarefree(f: Poly) -> bool:
    """Exact squarefree test: gcd(f, df/dx_0, ..., df/dx_n) is a constant."""
    if f.is_zero():
        return False
    if f.is_constant():
        return True
    import sympy

    g = to_sympy(f)
    for i in range(f.nvars):
        d = to_sympy(f.diff(i))
        if d.is_zero:
            continue
        g = sympy.gcd(g, d)
        if g.total_degree() == 0:
            return True
    return g.total_degree() == 0


def linear_factors(f: Poly):
    """Return the distinct linear factors of f if f is a reduced product of linear forms, else None."""
    import sympy

    if f.is_zero() or not f.is_homogeneous():
        return None
    if f.is_constant():
        return []
    _, factors = to_sympy(f).factor_list()
    out = []
    for p, mult in factors:
        if mult != 1 or p.total_degree() != 1:
            return None
        out.append(from_sympy(p, f.names).monic())
    out.sort(key=lambda q: [(-q.coefficient(e)) for e in monomials_of_degree(f.nvars, 1)])
    return out


def product(polys: Iterable[Poly], nvars, names=None):
    result = Poly.constant(1, nvars, names)
    for p in polys:
        result = result * p
    return result
