"""JSON documents for decision problems and set pairs.

A problem document::

    {"attributes": ["x1", "x2"],
     "weights": [0.4, 0.6],
     "alternatives": {"H1": [[0.5, 0.4], [0.9]], "H2": [[0.3], [0.7, 0.2]]}}

A pair document (``weights`` optional, used by weighted measures)::

    {"A": {"x1": [0.5, 0.4]}, "B": {"x1": [0.7, 0.4, 0.2]}, "weights": [1.0]}

Repeated grades inside a cell are collapsed on parse.
"""
from __future__ import annotations

import json
from importlib import resources
from typing import NamedTuple, Optional

from .core import WEIGHT_TOL, HesitantSet, make_element
from .errors import HFSError, OutOfRange, ParseError, ValidationError
from .madm import DecisionProblem

BUNDLED = ("energy_projects.json", "energy_projects_as_printed.json")


class HesitantPair(NamedTuple):
    A: HesitantSet
    B: HesitantSet
    weights: Optional[tuple] = None


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"expected a number, got {value!r}", where)
    return float(value)


def _cell(raw, where):
    if not isinstance(raw, list):
        raise ParseError(f"expected a list of grades, got {raw!r}", where)
    grades = [_number(v, f"{where}[{k}]") for k, v in enumerate(raw)]
    try:
        return make_element(grades, dedupe=True)
    except OutOfRange as exc:
        raise ValidationError("OutOfRange", f"{where}: grade {exc.value!r} outside [0, 1]") from None
    except HFSError as exc:
        raise ValidationError(type(exc).__name__, f"{where}: {exc}") from None


def _weights(raw, m, where="weights"):
    if not isinstance(raw, list):
        raise ParseError(f"expected a list of weights, got {raw!r}", where)
    w = [_number(v, f"{where}[{k}]") for k, v in enumerate(raw)]
    if len(w) != m:
        raise ValidationError("WeightLength", f"{len(w)} weights for {m} elements")
    if any(v < 0 or v > 1 for v in w):
        raise ValidationError("WeightRange", f"weights must lie in [0, 1]: {w}")
    if abs(sum(w) - 1.0) > WEIGHT_TOL:
        raise ValidationError("WeightSum", f"weights sum to {sum(w)!r}, not 1")
    return tuple(w)


def _load(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object", "line 1")
    return doc


def _hesitant_set(raw, where):
    if not isinstance(raw, dict) or not raw:
        raise ParseError("expected a non-empty object of element -> grades", where)
    return HesitantSet(tuple((k, _cell(v, f"{where}.{k}")) for k, v in raw.items()))


def parse_document(text: str):
    """Parse a problem or pair document into a DecisionProblem or HesitantPair."""
    doc = _load(text)
    if "alternatives" in doc:
        return _problem(doc)
    if "A" in doc and "B" in doc:
        A = _hesitant_set(doc["A"], "A")
        B = _hesitant_set(doc["B"], "B")
        if A.ids != B.ids:
            raise ValidationError("UniverseMismatch", f"A covers {A.ids}, B covers {B.ids}")
        w = _weights(doc["weights"], len(A)) if doc.get("weights") is not None else None
        return HesitantPair(A, B, w)
    raise ParseError("expected either 'alternatives' or both 'A' and 'B'", "top level")


def parse_problem(text: str) -> DecisionProblem:
    result = parse_document(text)
    if not isinstance(result, DecisionProblem):
        raise ParseError("expected a decision problem document", "top level")
    return result


def parse_pair(text: str) -> HesitantPair:
    result = parse_document(text)
    if not isinstance(result, HesitantPair):
        raise ParseError("expected a pair document with 'A' and 'B'", "top level")
    return result


def _problem(doc) -> DecisionProblem:
    for key in ("attributes", "weights"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}", "top level")
    attrs = doc["attributes"]
    if not isinstance(attrs, list) or not attrs or not all(isinstance(a, str) for a in attrs):
        raise ParseError("expected a non-empty list of attribute names", "attributes")
    weights = _weights(doc["weights"], len(attrs))
    alts_raw = doc["alternatives"]
    if not isinstance(alts_raw, dict):
        raise ParseError("expected an object of name -> cells", "alternatives")
    alts = []
    for name, cells in alts_raw.items():
        where = f"alternatives.{name}"
        if not isinstance(cells, list):
            raise ParseError("expected a list of cells", where)
        if len(cells) != len(attrs):
            raise ValidationError("AttributeCount",
                                  f"{where} has {len(cells)} cells for {len(attrs)} attributes")
        row = tuple((a, _cell(c, f"{where}[{k}]")) for k, (a, c) in enumerate(zip(attrs, cells)))
        alts.append((name, HesitantSet(row)))
    try:
        return DecisionProblem(tuple(alts), tuple(attrs), weights)
    except HFSError as exc:
        raise ValidationError(type(exc).__name__, str(exc)) from None


def dump_problem(problem: DecisionProblem) -> str:
    doc = {
        "attributes": list(problem.attributes),
        "weights": list(problem.weights),
        "alternatives": {name: [list(e.values) for e in h.elements]
                         for name, h in problem.alternatives},
    }
    return json.dumps(doc, indent=2) + "\n"


def dump_pair(pair: HesitantPair) -> str:
    doc = {"A": pair.A.to_dict(), "B": pair.B.to_dict()}
    if pair.weights is not None:
        doc["weights"] = list(pair.weights)
    return json.dumps(doc, indent=2) + "\n"


def bundled_text(name: str = BUNDLED[0]) -> str:
    return resources.files("hfsim").joinpath("data", name).read_text(encoding="utf-8")


def load_bundled(name: str = BUNDLED[0]) -> DecisionProblem:
    """The energy-project problem shipped with the package."""
    return parse_problem(bundled_text(name))
