"""Divisor and germ files.

JSON::

    {"id": "braid_a3", "n": 2, "arrangement": ["x", "y", "x - y", ...]}
    {"n": 2, "f": "x^5*z + x^3*y^3 + y^5*z",
     "singular_points": [{"point": [0, 0, 1], "milnor": 16}]}
    {"germ": "x^5 + x^3*y^3 + y^5", "vars": ["x", "y"]}

Plain text uses ``key: value`` lines (``#`` starts a comment).  Lines
after ``arrangement:`` (or a file with no keys at all) are linear forms,
one per line, or rows of integer coefficients.  ``point:`` lines declare
singular points as ``a, b, c`` optionally followed by ``milnor k``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .logderiv import DivisorSpec
from .poly import ALIASES, Poly, default_names, parse_poly
from .singular import GermSpec


@dataclass
class GermFile:
    name: str
    germ: GermSpec


def _names_for(n):
    return default_names(n + 1)


def _infer_n(texts):
    idx = -1
    for t in texts:
        for m in re.finditer(r"[A-Za-z_][A-Za-z_0-9]*", t):
            name = m.group(0)
            if re.fullmatch(r"x\d+", name):
                idx = max(idx, int(name[1:]))
            elif name in ALIASES:
                idx = max(idx, ALIASES.index(name))
    return max(idx, 1)


def _is_matrix_row(line):
    return re.fullmatch(r"\s*-?\d+(/\d+)?([\s,]+-?\d+(/\d+)?)*\s*", line) is not None


def _row_to_form(line):
    coeffs = [Fraction(t) for t in re.split(r"[\s,]+", line.strip()) if t]
    return Poly.linear_form(coeffs)


def _parse_point(text):
    return tuple(Fraction(str(t).strip()) for t in (text if isinstance(text, (list, tuple)) else text.split(",")))


def divisor_from_dict(data: dict, name: str = ""):
    name = str(data.get("id", name))
    if "germ" in data:
        names = tuple(data.get("vars") or ("x", "y"))
        return GermFile(name, GermSpec(parse_poly(data["germ"], names)))
    forms_text = data.get("arrangement")
    matrix = data.get("matrix")
    if "n" in data:
        n = int(data["n"])
    elif matrix:
        n = len(matrix[0]) - 1
    elif forms_text and _is_matrix_row(forms_text[0]):
        n = len(re.split(r"[\s,]+", forms_text[0].strip())) - 1
    else:
        n = _infer_n(forms_text or [data.get("f", "")])
    names = _names_for(n)
    singular = []
    for sp in data.get("singular_points", []) or []:
        singular.append((_parse_point(sp["point"]), sp.get("milnor")))
    if matrix is not None:
        forms = [Poly.linear_form([Fraction(str(a)) for a in row]) for row in matrix]
        D = DivisorSpec.from_arrangement(forms, n, name)
    elif forms_text is not None:
        forms = [_row_to_form(t) if _is_matrix_row(t) else parse_poly(t, names) for t in forms_text]
        if forms:
            D = DivisorSpec.from_arrangement(forms, n, name)
        else:
            D = DivisorSpec.empty(n, name)
    elif "f" in data:
        D = DivisorSpec(n, parse_poly(str(data["f"]), names), None, name)
    else:
        raise ValueError("divisor file needs one of 'f', 'arrangement', 'matrix' or 'germ'")
    D.singular_points = singular
    return D


def parse_text(text: str, name: str = ""):
    data: dict = {}
    block = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"([A-Za-z_]+)\s*:\s*(.*)", line)
        if m:
            key, value = m.group(1).lower(), m.group(2).strip()
            block = None
            if key == "arrangement":
                data["arrangement"] = [value] if value else []
                block = "arrangement"
            elif key == "vars":
                data["vars"] = [v.strip() for v in value.split(",") if v.strip()]
            elif key == "point":
                pm = re.fullmatch(r"(.*?)\s*(?:milnor\s+(\d+))?", value)
                data.setdefault("singular_points", []).append(
                    {"point": _parse_point(pm.group(1)), "milnor": int(pm.group(2)) if pm.group(2) else None}
                )
            else:
                data[key] = value
            continue
        if block is None:
            data.setdefault("arrangement", [])
            block = "arrangement"
        data[block].append(line)
    return divisor_from_dict(data, name)


def load_divisor(path):
    """Load a divisor (DivisorSpec) or a germ (GermFile) from a JSON or text file."""
    path = Path(path)
    text = path.read_text()
    name = path.stem
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        return divisor_from_dict(json.loads(text), name)
    return parse_text(text, name)
