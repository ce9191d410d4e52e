"""Chern-Schwartz-MacPherson classes of complements in P^n.

Three routes: the intersection lattice (reference), the characteristic
polynomial (independent cross-check), and plane curves with
quasi-homogeneous singularities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .arrangement import IntersectionLattice, indicator_coefficients
from .chow import ChowClass, chern_tangent


@dataclass
class CurveSingularityData:
    degree: int
    points: list = field(default_factory=list)  # [(point tuple, milnor)]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("curve degree must be at least 1")
        pts = [tuple(p) for p, _ in self.points]
        if len(set(pts)) != len(pts):
            raise ValueError("singular points must be distinct")
        if any(mu < 1 for _, mu in self.points):
            raise ValueError("Milnor numbers of singular points are at least 1")

    def euler_characteristic(self):
        """chi(D) = 3d - d^2 + sum of Milnor numbers."""
        d = self.degree
        return 3 * d - d * d + sum(mu for _, mu in self.points)


def csm_linear_subspace(k: int, n: int) -> ChowClass:
    """Push-forward of c(TP^k) cap [P^k] into P^n."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    coeffs = [0] * (n + 1)
    for i in range(k + 1):
        coeffs[n - k + i] = comb(k + 1, i)
    return ChowClass(n, coeffs)


def csm_arrangement_complement(L: IntersectionLattice, n: int | None = None) -> ChowClass:
    """sum over flats x of m_x * c_SM(1_x), using indicator coefficients."""
    n = L.n if n is None else n
    if n != L.n:
        raise ValueError("lattice lives in a different projective space")
    m = indicator_coefficients(L)
    total = ChowClass(n, [0] * (n + 1))
    for x in L.projective_flats():
        total = total + csm_linear_subspace(L.projective_dimension(x), n) * m.values[x.id]
    return total


def divide_by_t_minus_1(chi):
    """Synthetic division of a coefficient tuple (t^0 first) by (t - 1)."""
    chi = list(chi)
    if sum(chi) != 0:
        raise ValueError("characteristic polynomial is not divisible by (t - 1)")
    deg = len(chi) - 1
    q = [0] * deg
    carry = 0
    for k in range(deg, 0, -1):
        carry = chi[k] + carry
        q[k - 1] = carry
    return tuple(q)


def csm_from_charpoly(chi, n: int) -> ChowClass:
    """Map chi(t)/(t-1) = sum c_k t^k to sum c_k (1+h)^k h^{n-k} in A_*(P^n)."""
    reduced = divide_by_t_minus_1(chi)
    if len(reduced) > n + 1:
        raise ValueError("characteristic polynomial degree exceeds n + 1")
    total = ChowClass(n, [0] * (n + 1))
    for k, c in enumerate(reduced):
        if not c:
            continue
        coeffs = [0] * (n + 1)
        for i in range(k + 1):
            coeffs[n - k + i] = comb(k, i)
        total = total + ChowClass(n, coeffs) * c
    return total


def euler_characteristic_from_charpoly(chi) -> int:
    """chi(U) = reduced characteristic polynomial at t = 1."""
    return sum(divide_by_t_minus_1(chi))


def csm_curve_complement(data: CurveSingularityData) -> ChowClass:
    """c_SM(1_U) for a reduced plane curve with quasi-homogeneous singularities."""
    d = data.degree
    chi_d = data.euler_characteristic()
    return chern_tangent(2) - ChowClass(2, [0, d, chi_d])


def csm_points_complement(k: int) -> ChowClass:
    """k distinct points on P^1."""
    return chern_tangent(1) - ChowClass(1, [0, k])
