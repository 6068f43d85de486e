"""Exact JSON encodings of modules, windows, presentations and progressions.

All rationals are written as strings ("3", "-6/5").  Objects are built with
a fixed key order and dumped without key sorting, so output is
byte-identical for identical inputs.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List

from .interval_core import HomWindow, IntervalModule, PersistenceModule, as_rational, render_rational
from .polynomial import Polynomial, Variable
from .variety_builder import STATUS_HINTS, VarietyPresentation

SCHEMA_MODULE = "interleavings/module@1"
SCHEMA_WINDOWS = "interleavings/windows@1"
SCHEMA_DISTANCE = "interleavings/distance@1"
SCHEMA_VARIETY = "interleavings/variety@1"
SCHEMA_CLASS = "interleavings/class@1"
SCHEMA_PROGRESSION = "interleavings/progression@1"
SCHEMA_VERIFY = "interleavings/verify@1"

VARIABLE_NOTATION = (
    "k[i][j] is the scalar of the component M_j -> N_i shifted by epsilon; "
    "l[j][i] is the scalar of the component N_i -> M_j shifted by epsilon (1-based)"
)

r = render_rational


class FormatError(ValueError):
    """Malformed input document."""


def dumps(obj: Dict[str, Any]) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _expect_schema(doc, schema: str):
    if not isinstance(doc, dict):
        raise FormatError("expected a JSON object")
    found = doc.get("schema", schema)
    if found != schema:
        raise FormatError(f"expected schema {schema!r}, found {found!r}")


def _rational_field(raw, what: str) -> Fraction:
    if not isinstance(raw, (str, int)) or isinstance(raw, bool):
        raise FormatError(f"{what} must be a rational string, got {raw!r}")
    try:
        return as_rational(str(raw))
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{what}: {exc}") from None


# ------------------------------------------------------------------ modules


def module_to_json(P: PersistenceModule) -> Dict[str, Any]:
    return {
        "schema": SCHEMA_MODULE,
        "name": P.name,
        "intervals": [{"birth": r(s.birth), "death": r(s.death)} for s in P],
    }


def module_from_json(doc) -> PersistenceModule:
    _expect_schema(doc, SCHEMA_MODULE)
    name = doc.get("name", "M")
    if not isinstance(name, str):
        raise FormatError("name must be a string")
    items = doc.get("intervals")
    if not isinstance(items, list):
        raise FormatError("intervals must be a list")
    summands = []
    for k, item in enumerate(items):
        if not isinstance(item, dict) or set(item) - {"birth", "death"} or len(item) != 2:
            raise FormatError(f"interval #{k + 1} must have exactly 'birth' and 'death'")
        b = _rational_field(item["birth"], f"interval #{k + 1} birth")
        d = _rational_field(item["death"], f"interval #{k + 1} death")
        if not b < d:
            raise FormatError(f"interval #{k + 1} is degenerate: [{r(b)}, {r(d)})")
        summands.append(IntervalModule(b, d))
    return PersistenceModule(tuple(summands), name=name)


def load_module(path: str) -> PersistenceModule:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON ({exc})") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None
    try:
        return module_from_json(doc)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


# ------------------------------------------------------------------ windows


def window_to_json(w: HomWindow) -> Dict[str, Any]:
    if w.is_empty:
        return {"kind": "Empty"}
    return {"kind": "Window", "lo": r(w.lo), "hi": r(w.hi)}


def window_from_json(doc) -> HomWindow:
    if doc.get("kind") == "Empty":
        return HomWindow()
    if doc.get("kind") != "Window":
        raise FormatError(f"unknown window kind {doc.get('kind')!r}")
    return HomWindow(_rational_field(doc["lo"], "lo"), _rational_field(doc["hi"], "hi"))


# ------------------------------------------------------------- polynomials


def polynomial_to_json(p: Polynomial) -> Dict[str, Any]:
    return {
        "text": p.render(),
        "terms": [
            {"coeff": r(c), "monomial": [v.render() for v in mono]} for mono, c in p.terms
        ],
    }


def polynomial_from_json(doc) -> Polynomial:
    terms = []
    for t in doc["terms"]:
        mono = tuple(Variable.parse(s) for s in t["monomial"])
        terms.append((mono, _rational_field(t["coeff"], "coeff")))
    return Polynomial(terms)


def _variables(vs) -> List[str]:
    return [v.render() for v in vs]


def variety_to_json(p: VarietyPresentation, probe: Dict[str, Any] = None) -> Dict[str, Any]:
    doc = {
        "schema": SCHEMA_VARIETY,
        "notation": VARIABLE_NOTATION,
        "m": p.m,
        "n": p.n,
        "epsilon": r(p.epsilon),
        "variables": _variables(p.variables()),
        "forced_zero": _variables(p.forced_zero),
        "free_variables": _variables(p.free_variables()),
        "active_M": [list(x) for x in p.active_M],
        "active_N": [list(x) for x in p.active_N],
        "generators": [polynomial_to_json(g) for g in p.generators],
        "unsubstituted_generators": [g.render() for g in p.raw_generators],
        "status_hint": p.status_hint,
    }
    if p.M is not None and p.N is not None:
        doc["M"] = module_to_json(p.M)
        doc["N"] = module_to_json(p.N)
    if probe is not None:
        doc["probe"] = probe
    return doc


def variety_from_json(doc) -> VarietyPresentation:
    _expect_schema(doc, SCHEMA_VARIETY)
    status = doc["status_hint"]
    if status not in STATUS_HINTS:
        raise FormatError(f"unknown status hint {status!r}")
    raw = ()
    M = module_from_json(doc["M"]) if "M" in doc else None
    N = module_from_json(doc["N"]) if "N" in doc else None
    if M is not None and N is not None:
        # the unsubstituted list is display-only; rebuild it from the modules
        from .variety_builder import build_variety
        raw = build_variety(M, N, _rational_field(doc["epsilon"], "epsilon")).raw_generators
    return VarietyPresentation(
        m=int(doc["m"]),
        n=int(doc["n"]),
        epsilon=_rational_field(doc["epsilon"], "epsilon"),
        forced_zero=tuple(Variable.parse(s) for s in doc["forced_zero"]),
        active_M=tuple(tuple(x) for x in doc["active_M"]),
        active_N=tuple(tuple(x) for x in doc["active_N"]),
        generators=tuple(polynomial_from_json(g) for g in doc["generators"]),
        status_hint=status,
        raw_generators=raw,
        M=M,
        N=N,
    )


def assignment_to_json(values) -> Dict[str, str]:
    return {v.render(): r(x) for v, x in sorted(values.items())}


# -------------------------------------------------------------- progression


def progression_to_json(M: IntervalModule, N: IntervalModule, prog) -> Dict[str, Any]:
    segs = []
    starts = [s for s, _ in prog.segments]
    for k, (start, cls) in enumerate(prog.segments):
        end = r(starts[k + 1]) if k + 1 < len(starts) else None
        segs.append({"start": r(start), "end": end, "class": cls})
    return {
        "schema": SCHEMA_PROGRESSION,
        "M": str(M),
        "N": str(N),
        "breakpoints": [r(b) for b in prog.breakpoints],
        "segments": segs,
    }


def progression_from_json(doc):
    from .interval_classifier import Progression

    _expect_schema(doc, SCHEMA_PROGRESSION)
    segments = tuple((_rational_field(s["start"], "start"), s["class"]) for s in doc["segments"])
    breaks = tuple(_rational_field(b, "breakpoint") for b in doc["breakpoints"])
    return Progression(segments, breaks)
