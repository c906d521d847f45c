"""Reading and writing decision problems as JSON documents.

Layout::

    {
      "notes": ["free text"],
      "scale": {"labels": ["perfect", ...], "values": [[0.75, 1, 1], ...]},
      "criteria": ["C1", "C2"],
      "quantifier": "power:2",                 # or {"knots": [[0, 0], [1, 1]]}
      "importances": {"C1": 2, "C2": 1},       # optional; a list aligned with criteria also works
      "alternatives": {
        "x": {"C1": {"probability": [...]}, "C2": {"possibility": [...]}}
      },
      "options": {"ranking": "centroid", "grid": 1001, "tnorm": "minimum"},
      "reference": {"x": {"aggregate": [...]}}  # optional expected values to cross-check
    }

A satisfaction is one of ``{"probability": [...]}``, ``{"possibility": [...]}``,
``{"interval": [lo, hi]}`` (grades, 1-based, or labels),
``{"interval_values": [low, high]}`` (numeric bounds on the grade modes) or
``{"certain": grade}`` (a grade number or a label).
"""

from __future__ import annotations

import json
from typing import Any

from .fuzzy_numbers import DEFAULT_GRID
from .measures import (
    Certain,
    Interval,
    LinguisticScale,
    Possibility,
    Probability,
    UncertainSatisfaction,
    ValidationError,
    interval_from_bounds,
)
from .owa import PiecewiseLinear, Power, Quantifier, parse_quantifier
from .pipeline import REFERENCE_TOL, DecisionProblem

TOP_LEVEL = ("notes", "scale", "criteria", "quantifier", "importances", "alternatives", "options", "reference")
OPTIONS = ("ranking", "grid", "tnorm", "reference_tol")
SATISFACTION_KINDS = ("probability", "possibility", "interval", "interval_values", "certain")


class SpecError(ValidationError):
    """A spec document that does not describe a valid problem."""


def normalize_ranking(name: str) -> str:
    return name.replace("-", "_").lower()


def parse_spec(text: str, strict: bool = True) -> tuple[DecisionProblem, list[str]]:
    """Parse a spec document.

    Returns the problem and any warnings; raises :class:`SpecError` with
    located diagnostics otherwise.  Unknown fields are errors when
    ``strict`` and warnings when not.
    """
    if not text.strip():
        doc: Any = {}
    else:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError([f"line {exc.lineno} column {exc.colno}: {exc.msg}"]) from None
    if not isinstance(doc, dict):
        raise SpecError(["document must be a JSON object"])

    errors: list[str] = []
    warnings: list[str] = []

    def unknown(where: str, keys) -> None:
        for key in keys:
            msg = f"{where}{key}: unknown field"
            (errors if strict else warnings).append(msg)

    unknown("", [k for k in doc if k not in TOP_LEVEL])
    for key in ("scale", "criteria", "quantifier", "alternatives"):
        if key not in doc:
            errors.append(f"missing {key}")
    if errors:
        raise SpecError(errors)

    scale = _parse_scale(doc["scale"], errors, unknown)
    criteria = _parse_criteria(doc["criteria"], errors)
    quantifier = _parse_quantifier(doc["quantifier"], errors)
    importances = _parse_importances(doc.get("importances"), criteria, errors)
    options = doc.get("options", {})
    if not isinstance(options, dict):
        errors.append("options: expected an object")
        options = {}
    unknown("options.", [k for k in options if k not in OPTIONS])
    notes = doc.get("notes", [])
    if isinstance(notes, str):
        notes = [notes]
    if not isinstance(notes, list) or not all(isinstance(s, str) for s in notes):
        errors.append("notes: expected a list of strings")
        notes = []

    alternatives: dict[str, dict[str, UncertainSatisfaction]] = {}
    raw_alts = doc["alternatives"]
    if not isinstance(raw_alts, dict) or not raw_alts:
        errors.append("alternatives: expected a non-empty object")
        raw_alts = {}
    for name, sats in raw_alts.items():
        if not isinstance(sats, dict):
            errors.append(f"alternatives.{name}: expected an object of criterion satisfactions")
            continue
        alternatives[name] = {}
        for crit, raw in sats.items():
            sat = _parse_satisfaction(raw, scale, f"alternatives.{name}.{crit}", errors)
            if sat is not None:
                alternatives[name][crit] = sat

    reference = _parse_reference(doc.get("reference", {}), errors, unknown)

    if errors or scale is None or quantifier is None:
        raise SpecError(errors)

    problem = DecisionProblem(
        scale=scale,
        criteria=criteria,
        quantifier=quantifier,
        alternatives=alternatives,
        importances=importances,
        ranking=normalize_ranking(str(options.get("ranking", "centroid"))),
        grid=_as_int(options.get("grid", DEFAULT_GRID), "options.grid", errors),
        tnorm=str(options.get("tnorm", "minimum")),
        reference=reference,
        reference_tol=float(options.get("reference_tol", REFERENCE_TOL)),
        notes=tuple(notes),
    )
    errors.extend(problem.diagnostics())
    if errors:
        raise SpecError(errors)
    return problem, warnings


def _as_int(value: Any, where: str, errors: list[str]) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        errors.append(f"{where}: expected an integer, got {value!r}")
        return DEFAULT_GRID
    return value


def _parse_scale(raw: Any, errors: list[str], unknown) -> LinguisticScale | None:
    if not isinstance(raw, dict):
        errors.append("scale: expected an object with labels and values")
        return None
    unknown("scale.", [k for k in raw if k not in ("labels", "values")])
    labels, values = raw.get("labels"), raw.get("values")
    if not isinstance(labels, list) or not isinstance(values, list):
        errors.append("scale: labels and values must both be lists")
        return None
    triples = []
    for j, v in enumerate(values, start=1):
        if not (isinstance(v, list) and len(v) == 3 and all(_is_number(x) for x in v)):
            errors.append(f"scale.values[{j}]: expected [a, b, c], got {v!r}")
            return None
        triples.append(tuple(v))
    try:
        return LinguisticScale(tuple(labels), tuple(triples))
    except ValueError as exc:
        diags = exc.diagnostics if isinstance(exc, ValidationError) else [str(exc)]
        errors.extend(f"scale: {d}" for d in diags)
        return None


def _parse_criteria(raw: Any, errors: list[str]) -> tuple[str, ...]:
    if not isinstance(raw, list) or not raw or not all(isinstance(c, str) for c in raw):
        errors.append("criteria: expected a non-empty list of names")
        return ()
    return tuple(raw)


def _parse_quantifier(raw: Any, errors: list[str]) -> Quantifier | None:
    try:
        if isinstance(raw, str):
            return parse_quantifier(raw)
        if isinstance(raw, dict) and set(raw) == {"power"}:
            return Power(float(raw["power"]))
        if isinstance(raw, dict) and set(raw) == {"knots"}:
            return PiecewiseLinear(tuple(tuple(k) for k in raw["knots"]))
        if isinstance(raw, list):
            return PiecewiseLinear(tuple(tuple(k) for k in raw))
    except (TypeError, ValueError) as exc:
        errors.append(f"quantifier: {exc}")
        return None
    errors.append(f"quantifier: expected 'power:<alpha>', a knot list or an object, got {raw!r}")
    return None


def _parse_importances(raw: Any, criteria: tuple[str, ...], errors: list[str]) -> tuple[float, ...] | None:
    if raw is None:
        return None
    if isinstance(raw, dict):
        missing = [c for c in criteria if c not in raw]
        extra = [k for k in raw if k not in criteria]
        if missing or extra:
            errors.append(f"importances: missing {missing}, undeclared {extra}")
            return None
        raw = [raw[c] for c in criteria]
    if not isinstance(raw, list) or not all(_is_number(x) for x in raw):
        errors.append("importances: expected numbers keyed by criterion or aligned with criteria")
        return None
    return tuple(float(x) for x in raw)


def _parse_reference(raw: Any, errors: list[str], unknown) -> dict[str, tuple[float, ...]]:
    if not isinstance(raw, dict):
        errors.append("reference: expected an object keyed by alternative")
        return {}
    out = {}
    for name, entry in raw.items():
        if not isinstance(entry, dict) or "aggregate" not in entry:
            errors.append(f"reference.{name}: expected {{'aggregate': [...]}}")
            continue
        unknown(f"reference.{name}.", [k for k in entry if k != "aggregate"])
        values = entry["aggregate"]
        if not isinstance(values, list) or not all(_is_number(x) for x in values):
            errors.append(f"reference.{name}.aggregate: expected a list of numbers")
            continue
        out[name] = tuple(float(x) for x in values)
    return out


def _grade(value: Any, scale: LinguisticScale | None, where: str, errors: list[str]) -> int | None:
    if isinstance(value, str):
        if scale is None or value not in scale.labels:
            errors.append(f"{where}: unknown grade label {value!r}")
            return None
        return scale.grade_of(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    errors.append(f"{where}: expected a grade number or label, got {value!r}")
    return None


def _parse_satisfaction(
    raw: Any, scale: LinguisticScale | None, where: str, errors: list[str]
) -> UncertainSatisfaction | None:
    if not isinstance(raw, dict) or len(raw) != 1:
        errors.append(f"{where}: expected exactly one of {', '.join(SATISFACTION_KINDS)}")
        return None
    ((kind, body),) = raw.items()
    if kind in ("probability", "possibility"):
        if not isinstance(body, list) or not all(_is_number(x) for x in body):
            errors.append(f"{where}: {kind} expects a list of numbers")
            return None
        return Probability(tuple(body)) if kind == "probability" else Possibility(tuple(body))
    if kind == "certain":
        grade = _grade(body, scale, where, errors)
        return None if grade is None else Certain(grade)
    if kind == "interval":
        if not isinstance(body, list) or len(body) != 2:
            errors.append(f"{where}: interval expects [lo, hi]")
            return None
        lo, hi = (_grade(v, scale, where, errors) for v in body)
        return None if lo is None or hi is None else Interval(lo, hi)
    if kind == "interval_values":
        if not (isinstance(body, list) and len(body) == 2 and all(_is_number(x) for x in body)):
            errors.append(f"{where}: interval_values expects [low, high]")
            return None
        if scale is None:
            return None
        try:
            return interval_from_bounds(scale, float(body[0]), float(body[1]))
        except ValueError as exc:
            errors.append(f"{where}: {exc}")
            return None
    errors.append(f"{where}: unknown satisfaction kind {kind!r}")
    return None


def _is_number(x: Any) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def satisfaction_to_json(sat: UncertainSatisfaction) -> dict[str, Any]:
    if isinstance(sat, Probability):
        return {"probability": list(sat.masses)}
    if isinstance(sat, Possibility):
        return {"possibility": list(sat.degrees)}
    if isinstance(sat, Interval):
        return {"interval": [sat.lo, sat.hi]}
    return {"certain": sat.grade}


def quantifier_to_json(q: Quantifier) -> Any:
    if isinstance(q, Power):
        return f"power:{q.exponent!r}"
    return {"knots": [list(k) for k in q.knots]}


def problem_to_json(problem: DecisionProblem) -> dict[str, Any]:
    doc: dict[str, Any] = {}
    if problem.notes:
        doc["notes"] = list(problem.notes)
    doc["scale"] = {
        "labels": list(problem.scale.labels),
        "values": [list(v.as_tuple()) for v in problem.scale.values],
    }
    doc["criteria"] = list(problem.criteria)
    doc["quantifier"] = quantifier_to_json(problem.quantifier)
    if problem.importances is not None:
        doc["importances"] = dict(zip(problem.criteria, problem.importances))
    doc["alternatives"] = {
        name: {crit: satisfaction_to_json(sat) for crit, sat in sats.items()}
        for name, sats in problem.alternatives.items()
    }
    doc["options"] = {
        "ranking": problem.ranking,
        "grid": problem.grid,
        "tnorm": problem.tnorm,
        "reference_tol": problem.reference_tol,
    }
    if problem.reference:
        doc["reference"] = {name: {"aggregate": list(v)} for name, v in problem.reference.items()}
    return doc


def dump_spec(problem: DecisionProblem) -> str:
    return json.dumps(problem_to_json(problem), indent=2, ensure_ascii=False) + "\n"
