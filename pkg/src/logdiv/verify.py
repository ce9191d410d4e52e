"""Theorem harness: both sides of c_SM(1_U) = c(Der(-log D)) cap [P^n] and the section checks."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .arrangement import (
    characteristic_polynomial,
    format_polynomial,
    generic_section,
    intersection_lattice,
    restrict_forms,
    section_realizes_truncation,
)
from .chow import ChowClass, chern_logderiv_from_exponents, chern_tangent, degree, degrees
from .csm import (
    CurveSingularityData,
    csm_arrangement_complement,
    csm_curve_complement,
    csm_from_charpoly,
    csm_points_complement,
    euler_characteristic_from_charpoly,
)
from .errors import Inconclusive, NotReducedError
from .logderiv import DivisorSpec, NotFree, exponents
from .singular import plane_curve_singularities, sample_hyperplane
from .arrangement import eliminate
from .poly import Poly, is_squarefree

PASS = "pass"
FAIL = "fail"
NOT_FREE = "inapplicable (not free)"
HYPOTHESIS_VIOLATED = "hypothesis violated"
INCONCLUSIVE = "inconclusive"


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def _vec(c: ChowClass | None):
    return None if c is None else c.to_json()


@dataclass
class VerificationReport:
    divisor_id: str
    n: int
    degree: int
    mode: str
    seed: int
    freeness: dict
    csm_route: str | None = None
    csm: list | None = None
    chern: list | None = None
    degrees_csm: list | None = None
    degrees_chern: list | None = None
    verdicts: list | None = None
    verdict: str = INCONCLUSIVE
    singular_points: list = field(default_factory=list)
    cross_checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


# -- the two sides ---------------------------------------------------------------


@dataclass
class CsmResult:
    cls: ChowClass | None
    route: str | None
    hypothesis_ok: bool = True
    singular_points: list = field(default_factory=list)
    cross_checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)


def csm_side(D: DivisorSpec) -> CsmResult:
    """c_SM(1_U) by the lattice route, the points route (n = 1) or the plane curve route."""
    n = D.n
    if D.f.is_constant():
        return CsmResult(chern_tangent(n), "empty")
    if D.arrangement_forms is not None:
        L = intersection_lattice(D.arrangement_forms, n)
        cls = csm_arrangement_complement(L)
        chi = characteristic_polynomial(L)
        alt = csm_from_charpoly(chi, n)
        checks = {
            "charpoly": format_polynomial(chi),
            "charpoly_route_agrees": alt == cls,
            "euler_characteristic_charpoly": euler_characteristic_from_charpoly(chi),
        }
        return CsmResult(cls, "lattice", True, [], checks)
    if n == 1:
        return CsmResult(csm_points_complement(D.degree), "points")
    if n == 2:
        declared = [p for p, _ in D.singular_points]
        sing = plane_curve_singularities(D.f, declared)
        pts = []
        notes = [sing.note] if sing.note else []
        declared_mu = {tuple(p): mu for p, mu in D.singular_points}
        for s in sing.points:
            pts.append(
                {"point": [_num(a) for a in s.point], "milnor": s.milnor, "tjurina": s.tjurina,
                 "quasihomogeneous": s.quasihomogeneous}
            )
            for p, mu in declared_mu.items():
                if mu is not None and _same_point(p, s.point) and mu != s.milnor:
                    notes.append(f"declared milnor {mu} at {list(map(_num, p))} differs from computed {s.milnor}")
        data = CurveSingularityData(D.degree, [(s.point, s.milnor) for s in sing.points])
        checks = {"euler_characteristic_divisor": data.euler_characteristic(),
                  "euler_characteristic_complement": 3 - data.euler_characteristic()}
        if not sing.complete:
            return CsmResult(None, "curve", True, pts, checks, notes)
        qh = all(s.quasihomogeneous for s in sing.points)
        if not qh:
            notes.append("non-quasi-homogeneous singularity: curve route refused, Euler characteristic only")
            return CsmResult(None, "curve", False, pts, checks, notes)
        return CsmResult(csm_curve_complement(data), "curve", True, pts, checks, notes)
    return CsmResult(None, None, True, [], {}, [f"no CSM route for non-arrangement divisors in P^{n}"])


def _same_point(p, q):
    p, q = [Fraction(a) for a in p], [Fraction(a) for a in q]
    return all(a * q[j] == b * p[j] for j in range(len(p)) for a, b in [(p[i], q[i]) for i in range(len(p))])


@dataclass
class ChernResult:
    cls: ChowClass | None
    exponents: tuple | None
    status: str  # free | not free | inconclusive
    detail: str = ""


def chern_side(D: DivisorSpec, degree_bound=None) -> ChernResult:
    try:
        ex = exponents(D, degree_bound)
    except Inconclusive as exc:
        return ChernResult(None, None, "inconclusive", str(exc))
    if isinstance(ex, NotFree):
        return ChernResult(None, None, "not free", ex.reason)
    if sum(ex) != D.degree:
        raise AssertionError(f"exponent sum {sum(ex)} differs from degree {D.degree}")
    cls = chern_logderiv_from_exponents(ex, D.n)
    return ChernResult(cls, tuple(ex), "free")


# -- main check ------------------------------------------------------------------


def main_theorem_check(D: DivisorSpec, mode="full", seed=0, degree_bound=None) -> VerificationReport:
    """Compare c_SM(1_U) with c(Der(-log D)) cap [P^n], coefficient-wise or by degrees."""
    if mode not in ("full", "degrees"):
        raise ValueError("mode must be 'full' or 'degrees'")
    D.check_reduced()
    if not D.f.is_constant():
        D.recognize_arrangement()
    csm = csm_side(D)
    chern = chern_side(D, degree_bound)
    rep = VerificationReport(
        divisor_id=D.name, n=D.n, degree=D.degree, mode=mode, seed=seed,
        freeness={"status": chern.status,
                  "exponents": list(chern.exponents) if chern.exponents else None,
                  "detail": chern.detail},
        csm_route=csm.route, csm=_vec(csm.cls), chern=_vec(chern.cls),
        singular_points=csm.singular_points, cross_checks=dict(csm.cross_checks), notes=list(csm.notes),
    )
    for c in (csm.cls, chern.cls):
        if c is not None and not c.is_integral():
            raise AssertionError(f"non-integral characteristic class {c}")
    if csm.cls is not None:
        rep.degrees_csm = [_num(a) for a in degrees(csm.cls)]
        rep.cross_checks["euler_characteristic_csm"] = _num(degrees(csm.cls)[0])
    if chern.cls is not None:
        rep.degrees_chern = [_num(a) for a in degrees(chern.cls)]
    if D.arrangement_forms is None and D.n >= 3 and not D.f.is_constant():
        rep.notes.append("local quasi-homogeneity along positive-dimensional strata is not tested")
    # a certified non-QH point outranks graded non-freeness, which is only sufficient for local non-freeness
    if not csm.hypothesis_ok:
        rep.verdict = HYPOTHESIS_VIOLATED
        if chern.cls is not None:
            rep.cross_checks["euler_characteristic_chern"] = _num(degrees(chern.cls)[0])
        return rep
    if chern.status == "not free":
        rep.verdict = NOT_FREE
        rep.notes.append("freeness is decided for the graded cone module (split Der(-log D))")
        return rep
    if csm.cls is None or chern.cls is None:
        rep.verdict = INCONCLUSIVE
        if chern.status == "inconclusive":
            rep.notes.append(chern.detail)
        return rep
    if mode == "full":
        rep.verdicts = [a == b for a, b in zip(csm.cls.coeffs, chern.cls.coeffs)]
    else:
        rep.verdicts = [a == b for a, b in zip(degrees(csm.cls), degrees(chern.cls))]
    rep.verdict = PASS if all(rep.verdicts) else FAIL
    return rep


def degree_equality_check(D: DivisorSpec, degree_bound=None) -> bool:
    """The i = 0 case: both classes have the same degree (Euler characteristic of U)."""
    csm = csm_side(D)
    chern = chern_side(D, degree_bound)
    if chern.status != "free":
        raise ValueError(f"degree check needs a free divisor ({chern.status})")
    if csm.cls is None:
        raise Inconclusive("CSM class not available")
    return degrees(csm.cls)[0] == degrees(chern.cls)[0]


# -- hyperplane sections ---------------------------------------------------------


@dataclass
class SectionSample:
    hyperplane: Poly
    chart: int
    divisor: DivisorSpec
    attempts: int


def sample_section(D: DivisorSpec, rng, max_attempts=10) -> SectionSample:
    """Restrict D to a random hyperplane, resampling degenerate or non-reduced draws."""
    for attempt in range(1, max_attempts + 1):
        H, chart = sample_hyperplane(rng, D.n + 1, f=D.f, names=D.f.names)
        g = eliminate(D.f, H, chart)
        if not is_squarefree(g):
            continue
        forms = None
        if D.arrangement_forms is not None:
            forms = [q.monic() for q in restrict_forms(D.arrangement_forms, H, chart)]
            if len(set(forms)) != len(forms):
                continue
        return SectionSample(H, chart, DivisorSpec(D.n - 1, g, forms, f"{D.name}|H"), attempt)
    raise Inconclusive(f"no non-degenerate hyperplane found in {max_attempts} draws")


@dataclass
class SectionRecursionReport:
    divisor_id: str
    mode: str
    seed: int
    class_on_x: list | None
    class_on_section: list | None
    rows: list
    verdict: str
    hyperplane: str | None = None
    notes: list = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


def _section_csm(D: DivisorSpec, rng, notes):
    if D.f.is_constant():
        return chern_tangent(D.n - 1), None
    if D.arrangement_forms is not None:
        L = intersection_lattice(D.arrangement_forms, D.n)
        S = generic_section(L)
        H = sample_section(D, rng).hyperplane
        realized = section_realizes_truncation(L, H)
        notes.append(f"sampled hyperplane {H} realizes the truncated lattice: {realized}")
        return csm_arrangement_complement(S), str(H)
    if D.n == 2:
        return csm_points_complement(D.degree), None
    raise Inconclusive(f"no CSM route for sections of non-arrangement divisors in P^{D.n}")


def section_recursion_check(D: DivisorSpec, mode="csm", seed=0, degree_bound=None) -> SectionRecursionReport:
    """Check deg_i(class U) = deg_{i-1}(class U') + deg_i(class U') for 1 <= i <= n."""
    if mode not in ("csm", "chern"):
        raise ValueError("mode must be 'csm' or 'chern'")
    if D.n < 2:
        raise ValueError("section recursion needs n >= 2")
    if not D.f.is_constant():
        D.recognize_arrangement()
    rng = random.Random(seed)
    notes = []
    H = None
    try:
        if mode == "csm":
            big = csm_side(D).cls
            if big is None:
                raise Inconclusive("CSM class of the complement is not available")
            small, H = _section_csm(D, rng, notes)
        else:
            ch = chern_side(D, degree_bound)
            if ch.cls is None:
                raise Inconclusive(f"divisor is {ch.status}")
            big = ch.cls
            if D.f.is_constant():
                section = DivisorSpec.empty(D.n - 1)
            else:
                sample = sample_section(D, rng)
                H, section = str(sample.hyperplane), sample.divisor
            sch = chern_side(section, degree_bound)
            if sch.cls is None:
                raise Inconclusive(f"section divisor is {sch.status}")
            small = sch.cls
            notes.append(f"section exponents {list(sch.exponents)}")
    except Inconclusive as exc:
        notes.append(str(exc))
        return SectionRecursionReport(D.name, mode, seed, None, None, [], INCONCLUSIVE, H, notes)
    rows = []
    for i in range(1, D.n + 1):
        lhs = degree(big, i)
        a, b = degree(small, i - 1), degree(small, i)
        rows.append({"i": i, "lhs": _num(lhs), "rhs_lower": _num(a), "rhs_same": _num(b), "ok": lhs == a + b})
    verdict = PASS if all(r["ok"] for r in rows) else FAIL
    return SectionRecursionReport(D.name, mode, seed, big.to_json(), small.to_json(), rows, verdict, H, notes)


@dataclass
class SectionPreservationReport:
    divisor_id: str
    seed: int
    hyperplane: str | None
    free_before: bool
    free_after: bool | None
    exponents_before: list | None
    exponents_after: list | None
    quasihomogeneous_after: bool | None
    verdict: str
    notes: list = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


def section_preservation_check(D: DivisorSpec, seed=0, degree_bound=None) -> SectionPreservationReport:
    """Does a random hyperplane section stay free (and quasi-homogeneous where testable)?"""
    if D.n < 2:
        raise ValueError("section preservation needs n >= 2")
    rng = random.Random(seed)
    before = chern_side(D, degree_bound)
    notes = []
    if D.f.is_constant():
        return SectionPreservationReport(D.name, seed, None, True, True, list(before.exponents),
                                         [0] * D.n, True, "preserved", ["empty divisor"])
    try:
        sample = sample_section(D, rng)
    except Inconclusive as exc:
        return SectionPreservationReport(D.name, seed, None, before.status == "free", None,
                                         list(before.exponents or []) or None, None, None, INCONCLUSIVE, [str(exc)])
    after = chern_side(sample.divisor, degree_bound)
    qh = None
    if sample.divisor.n == 1:
        qh = True
    elif sample.divisor.n == 2 and sample.divisor.arrangement_forms is None:
        sing = plane_curve_singularities(sample.divisor.f)
        if sing.complete:
            qh = all(s.quasihomogeneous for s in sing.points)
        else:
            notes.append(sing.note)
    elif sample.divisor.arrangement_forms is not None:
        qh = True
        notes.append("arrangements are locally quasi-homogeneous")
    free_after = {"free": True, "not free": False}.get(after.status)
    if before.status != "free":
        notes.append("input divisor is not (graded) free; preservation is not predicted")
    if free_after is None or qh is None:
        verdict = INCONCLUSIVE
    elif free_after and qh:
        verdict = "preserved"
    else:
        verdict = "not preserved"
        if not free_after:
            notes.append("section is not free as a graded module; local freeness is not decided here")
    return SectionPreservationReport(
        D.name, seed, str(sample.hyperplane), before.status == "free", free_after,
        list(before.exponents) if before.exponents else None,
        list(after.exponents) if after.exponents else None, qh, verdict, notes,
    )


# -- corpus ----------------------------------------------------------------------


@dataclass
class CorpusSummary:
    reports: list
    errors: dict

    @property
    def exit_code(self):
        return 1 if any(r.verdict == FAIL for r in self.reports) else 0

    def table(self):
        lines = [f"{'divisor':<28} {'verdict':<24} {'c_SM':<22} {'c(Der)':<22}"]
        for r in self.reports:
            lines.append(f"{r.divisor_id:<28} {r.verdict:<24} {str(r.csm):<22} {str(r.chern):<22}")
        for name, err in self.errors.items():
            lines.append(f"{name:<28} {'rejected: ' + err:<24}")
        return "\n".join(lines)


def _run_one(path, mode, seed, degree_bound):
    from .io import load_divisor

    D = load_divisor(path)
    if not isinstance(D, DivisorSpec):
        raise ValueError("germ files cannot be verified; use qh-test")
    return main_theorem_check(D, mode, seed, degree_bound)


def corpus_run(paths, mode="full", seed=0, degree_bound=None, jobs=1) -> CorpusSummary:
    reports, errors = [], {}
    paths = list(paths)
    if jobs > 1 and len(paths) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as pool:
            futures = [pool.submit(_run_one, p, mode, seed, degree_bound) for p in paths]
            outcomes = []
            for p, fut in zip(paths, futures):
                try:
                    outcomes.append((p, fut.result(), None))
                except Exception as exc:  # isolated per file
                    outcomes.append((p, None, exc))
    else:
        outcomes = []
        for p in paths:
            try:
                outcomes.append((p, _run_one(p, mode, seed, degree_bound), None))
            except Exception as exc:  # isolated per file
                outcomes.append((p, None, exc))
    for p, rep, exc in outcomes:
        if rep is not None:
            reports.append(rep)
        elif isinstance(exc, NotReducedError):
            errors[str(p)] = "not reduced"
        else:
            errors[str(p)] = f"{type(exc).__name__}: {exc}"
    return CorpusSummary(reports, errors)
