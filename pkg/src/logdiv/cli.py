"""Command-line front end: ``logdiv <subcommand> ...``.

Exit codes: 0 success / pass, 1 fail, 2 usage or parse error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .arrangement import characteristic_polynomial, format_polynomial, intersection_lattice, mobius
from .errors import Inconclusive, LogdivError, NotReducedError
from .groebner import use_order
from .io import GermFile, load_divisor
from .logderiv import DivisorSpec, NotFree, exponents, freeness_certificate
from .poly import WeightVector, is_quasihomogeneous
from .singular import (
    GermSpec,
    bertini_schematic_check,
    germ_at_point,
    germ_invariants,
    sample_hyperplane,
)
from . import verify as V

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


@dataclass
class CliConfig:
    subcommand: str
    paths: list = field(default_factory=list)
    seed: int = 0
    order: str = "grevlex"
    degree_bound: int | None = None
    output: str = "text"


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def _emit(cfg, payload, text):
    print(_dump(payload) if cfg.output == "json" else text)


def _parse_point(text):
    return tuple(Fraction(t.strip()) for t in text.split(","))


def _divisor(path) -> DivisorSpec:
    obj = load_divisor(path)
    if isinstance(obj, GermFile):
        raise ValueError(f"{path} is a germ file, a divisor is needed")
    return obj


def _germ(path, point=None) -> tuple[str, GermSpec]:
    obj = load_divisor(path)
    if isinstance(obj, GermFile):
        if point is not None:
            raise ValueError("--point applies to divisor files only")
        return obj.name, obj.germ
    if point is None:
        if obj.singular_points:
            point = obj.singular_points[0][0]
        else:
            raise ValueError("divisor file needs --point (or a declared singular point)")
    return obj.name, germ_at_point(obj.f, point)


# -- subcommands -----------------------------------------------------------------


def cmd_verify(cfg, args):
    if not cfg.paths:
        summary = V.CorpusSummary([], {})
    else:
        summary = V.corpus_run(cfg.paths, args.mode, cfg.seed, cfg.degree_bound, args.jobs)
    payload = {
        "seed": cfg.seed, "order": cfg.order, "mode": args.mode,
        "reports": [r.to_dict() for r in summary.reports],
        "rejected": summary.errors,
    }
    _emit(cfg, payload, summary.table())
    code = summary.exit_code
    # a single inconclusive divisor is reported as such; corpora only fail on "fail"
    if code == EXIT_OK and len(cfg.paths) == 1:
        if summary.errors:
            return EXIT_USAGE
        if summary.reports and summary.reports[0].verdict == V.INCONCLUSIVE:
            return EXIT_INCONCLUSIVE
    return code


def cmd_csm(cfg, args):
    D = _divisor(cfg.paths[0])
    D.check_reduced()
    if not D.f.is_constant():
        D.recognize_arrangement()
    res = V.csm_side(D)
    payload = {"id": D.name, "n": D.n, "route": res.route,
               "csm": res.cls.to_json() if res.cls else None,
               "degrees": [_num(a) for a in res.cls.degrees()] if res.cls else None,
               "cross_checks": res.cross_checks, "singular_points": res.singular_points, "notes": res.notes}
    text = f"c_SM(1_U) = {res.cls}  [{res.route} route]" if res.cls else f"c_SM unavailable: {'; '.join(res.notes)}"
    _emit(cfg, payload, text)
    if not res.hypothesis_ok:
        return EXIT_OK
    return EXIT_OK if res.cls is not None else EXIT_INCONCLUSIVE


def cmd_chern(cfg, args):
    D = _divisor(cfg.paths[0])
    D.check_reduced()
    res = V.chern_side(D, cfg.degree_bound)
    payload = {"id": D.name, "n": D.n, "status": res.status,
               "exponents": list(res.exponents) if res.exponents else None,
               "chern": res.cls.to_json() if res.cls else None, "detail": res.detail}
    text = f"c(Der(-log D)) = {res.cls}  exponents {list(res.exponents)}" if res.cls else f"{res.status}: {res.detail}"
    _emit(cfg, payload, text)
    return {"free": EXIT_OK, "not free": EXIT_FAIL}.get(res.status, EXIT_INCONCLUSIVE)


def cmd_exponents(cfg, args):
    D = _divisor(cfg.paths[0])
    D.check_reduced()
    ex = exponents(D, cfg.degree_bound)
    if isinstance(ex, NotFree):
        _emit(cfg, {"id": D.name, "free": False, "generators": ex.generator_count, "reason": ex.reason},
              f"not free: {ex.reason}")
        return EXIT_FAIL
    _emit(cfg, {"id": D.name, "free": True, "exponents": list(ex)}, " ".join(map(str, ex)))
    return EXIT_OK


def cmd_check_free(cfg, args):
    D = _divisor(cfg.paths[0])
    D.check_reduced()
    cert = freeness_certificate(D, cfg.degree_bound)
    if not cert.is_free:
        ex = exponents(D, cfg.degree_bound)
        reason = ex.reason if isinstance(ex, NotFree) else ""
        _emit(cfg, {"id": D.name, "free": False, "reason": reason}, f"not free: {reason}")
        return EXIT_FAIL
    basis = [str(t) for t in cert.basis]
    payload = {"id": D.name, "free": True, "exponents": list(cert.exponents), "basis": basis,
               "saito_scalar": _num(cert.saito_scalar), "determinant": str(cert.determinant)}
    lines = [f"free, exponents {list(cert.exponents)}"] + [f"  theta_{i} = {b}" for i, b in enumerate(basis)]
    lines.append(f"  det = {_num(cert.saito_scalar)} * f")
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


def _lattice_of(path):
    D = _divisor(path)
    if not D.recognize_arrangement():
        raise ValueError(f"{path} is not a hyperplane arrangement")
    return D, intersection_lattice(D.arrangement_forms, D.n)


def cmd_lattice(cfg, args):
    D, L = _lattice_of(cfg.paths[0])
    mu = mobius(L)
    flats = [{"rank": x.rank, "hyperplanes": sorted(x.forms), "mobius": mu[x.id]} for x in L.flats]
    counts = {str(k): v for k, v in L.counts().items()}
    by_dim = ", ".join(f"dim {k}: {v}" for k, v in L.counts().items())
    lines = [f"{len(L.forms)} hyperplanes in P^{L.n}; proper flats {by_dim}"]
    for x in flats:
        lines.append(f"  rank {x['rank']}  {x['hyperplanes']}  mu = {x['mobius']}")
    _emit(cfg, {"id": D.name, "n": L.n, "forms": [str(g) for g in L.forms], "counts": counts, "flats": flats},
          "\n".join(lines))
    return EXIT_OK


def cmd_charpoly(cfg, args):
    D, L = _lattice_of(cfg.paths[0])
    chi = characteristic_polynomial(L)
    _emit(cfg, {"id": D.name, "charpoly": list(chi), "text": format_polynomial(chi)}, format_polynomial(chi))
    return EXIT_OK


def _invariants(cfg, args):
    point = _parse_point(args.point) if args.point else None
    name, germ = _germ(cfg.paths[0], point)
    return name, germ, germ_invariants(germ)


def cmd_milnor(cfg, args):
    name, germ, inv = _invariants(cfg, args)
    _emit(cfg, {"id": name, "germ": str(germ.g), "milnor": inv.milnor}, str(inv.milnor))
    return EXIT_OK


def cmd_tjurina(cfg, args):
    name, germ, inv = _invariants(cfg, args)
    _emit(cfg, {"id": name, "germ": str(germ.g), "tjurina": inv.tjurina}, str(inv.tjurina))
    return EXIT_OK


def cmd_qh_test(cfg, args):
    if args.weights:
        obj = load_divisor(cfg.paths[0])
        f = obj.germ.g if isinstance(obj, GermFile) else obj.f
        w = [int(a) for a in args.weights.split(",")]
        terms = list(f.terms)
        wd = sum(a * e for a, e in zip(w, terms[0]))
        ok = is_quasihomogeneous(f, WeightVector(w, wd))
        _emit(cfg, {"id": obj.name, "weights": w, "weighted_degree": wd, "quasihomogeneous": ok},
              f"quasi-homogeneous for weights {tuple(w)}: {str(ok).lower()}")
        return EXIT_OK
    name, germ, inv = _invariants(cfg, args)
    if inv.milnor == 0:
        raise ValueError("the germ is smooth at the origin")
    payload = {"id": name, "germ": str(germ.g), "milnor": inv.milnor, "tjurina": inv.tjurina,
               "quasihomogeneous": inv.quasihomogeneous, "global_milnor": inv.global_milnor,
               "origin_supported": inv.origin_supported}
    text = f"mu = {inv.milnor}, tau = {inv.tjurina}: quasi-homogeneous {str(inv.quasihomogeneous).lower()}"
    _emit(cfg, payload, text)
    return EXIT_OK


def cmd_bertini(cfg, args):
    D = _divisor(cfg.paths[0])
    rng = random.Random(cfg.seed)
    rows = []
    for _ in range(args.samples):
        H, chart = sample_hyperplane(rng, D.f.nvars, f=D.f, names=D.f.names)
        rows.append({"hyperplane": str(H), "equal": bertini_schematic_check(D.f, H, chart)})
    good = sum(1 for r in rows if r["equal"])
    undecided = sum(1 for r in rows if r["equal"] is None)
    lines = [f"{r['hyperplane']}: {r['equal']}" for r in rows] + [f"{good}/{len(rows)} equal"]
    _emit(cfg, {"id": D.name, "seed": cfg.seed, "samples": rows, "equal": good}, "\n".join(lines))
    if undecided:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if good == len(rows) else EXIT_FAIL


def cmd_section_check(cfg, args):
    D = _divisor(cfg.paths[0])
    D.check_reduced()
    if args.kind == "recursion":
        rep = V.section_recursion_check(D, args.mode, cfg.seed, cfg.degree_bound)
        lines = [f"{D.name} [{args.mode}] class {rep.class_on_x} vs section {rep.class_on_section}"]
        for r in rep.rows:
            lines.append(f"  i={r['i']}: {r['lhs']} = {r['rhs_lower']} + {r['rhs_same']}  {'ok' if r['ok'] else 'FAIL'}")
    else:
        rep = V.section_preservation_check(D, cfg.seed, cfg.degree_bound)
        lines = [f"{D.name}: section by {rep.hyperplane}, free after {rep.free_after}, "
                 f"exponents {rep.exponents_after}, quasi-homogeneous {rep.quasihomogeneous_after}"]
    lines.append(f"verdict: {rep.verdict}")
    lines += [f"  note: {n}" for n in rep.notes]
    _emit(cfg, rep.to_dict(), "\n".join(lines))
    if rep.verdict == V.FAIL:
        return EXIT_FAIL
    if rep.verdict == V.INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


COMMANDS = {
    "verify": (cmd_verify, "check c_SM(1_U) against c(Der(-log D)) for divisor files"),
    "csm": (cmd_csm, "CSM class of the complement"),
    "chern": (cmd_chern, "Chern class of the logarithmic derivations (free divisors)"),
    "exponents": (cmd_exponents, "exponents of a free divisor"),
    "check-free": (cmd_check_free, "Saito certificate for freeness"),
    "lattice": (cmd_lattice, "intersection lattice of an arrangement"),
    "charpoly": (cmd_charpoly, "characteristic polynomial of an arrangement"),
    "milnor": (cmd_milnor, "Milnor number of a germ"),
    "tjurina": (cmd_tjurina, "Tjurina number of a germ"),
    "qh-test": (cmd_qh_test, "quasi-homogeneity test (mu == tau, or a given weight vector)"),
    "bertini": (cmd_bertini, "schematic Bertini check on random hyperplanes"),
    "section-check": (cmd_section_check, "hyperplane section recursion / preservation"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    common.add_argument("--degree-bound", type=int, default=None)

    p = argparse.ArgumentParser(prog="logdiv", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_, description=help_)
        nargs = "*" if name == "verify" else None
        sp.add_argument("paths", nargs=nargs, metavar="FILE" + ("..." if nargs else ""))
        if name == "verify":
            sp.add_argument("--mode", choices=["full", "degrees"], default="full")
            sp.add_argument("--jobs", type=int, default=1)
        if name in ("milnor", "tjurina", "qh-test"):
            sp.add_argument("--point", help="projective point a,b,c on a divisor file")
        if name == "qh-test":
            sp.add_argument("--weights", help="test weighted homogeneity for weights w0,w1,...")
        if name == "bertini":
            sp.add_argument("--samples", type=int, default=10)
        if name == "section-check":
            sp.add_argument("--kind", choices=["recursion", "preservation"], default="recursion")
            sp.add_argument("--mode", choices=["csm", "chern"], default="csm")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    paths = args.paths if isinstance(args.paths, list) else [args.paths]
    cfg = CliConfig(args.command, paths, args.seed, args.order, args.degree_bound, "json" if args.json else "text")
    handler = COMMANDS[args.command][0]
    try:
        with use_order(cfg.order):
            return handler(cfg, args)
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except NotReducedError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LogdivError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
