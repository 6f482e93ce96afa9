"""JSON input documents: tentacle sets and the values they are built from.

A document is either one tentacle object or ``{"tentacles": [...]}``. Each
tentacle carries a ``type``:

- ``puiseux``: ``{"phi": [{"c": "-1", "e": "3"}, ...], "omega": "-3"}``
- ``standard``: ``{"z": [1, 1]}``
- ``boundaries``: ``{"f1": poly, "f2": poly, "branches": [i, j]}``
- ``total_degree``: ``{}``
- ``plan``: ``{"steps": [{"omega": "5/2", "c": "1"}], "tail": {"omega", "c1", "c2"}}``

Rationals are integers or ``"p/q"`` strings, never floats. Polynomials are
strings in the text grammar or term lists ``[{"c": "-1", "x": 6, "y": 0}]``.
"""
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..errors import InputError, PolynomialSyntaxError, SchemaError
from ..exact.multipoly import MultiPoly, default_names
from ..exact.rational import XiPoly
from ..exact.series import LaurentPoly2, PuiseuxSeries
from ..keyforms.sequence import KeyFormSequence, RegionDescription, boundary_curves, build_keyforms
from ..puiseux.expansion import (
    DEFAULT_MAX_TERM_LIMIT,
    DEFAULT_TERM_LIMIT,
    SemidegreeSpec,
    generic_series_from_boundaries,
)
from ..semidegree.engine import StandardTentacleSpec, Tentacle, TentacleSet
from .parser import parse_polynomial

logger = logging.getLogger(__name__)

TENTACLE_TYPES = ("puiseux", "standard", "boundaries", "total_degree", "plan")


def decode_rat(value: Any, path: str) -> Fraction:
    """An exact rational from an int or a ``"p/q"`` string."""
    if isinstance(value, bool) or isinstance(value, float):
        raise SchemaError("rationals are written as integers or \"p/q\" strings", path)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"{value!r} is not a rational", path) from None
    raise SchemaError(f"expected a rational, got {type(value).__name__}", path)


def decode_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"expected an integer, got {value!r}", path)
    return value


def _require(obj: Dict[str, Any], key: str, path: str) -> Any:
    if key not in obj:
        raise SchemaError(f"missing field {key!r}", path)
    return obj[key]


def _require_object(value: Any, path: str) -> Dict[str, Any]:
    if not isinstance(value, dict):
        raise SchemaError(f"expected an object, got {type(value).__name__}", path)
    return value


def _require_list(value: Any, path: str) -> List[Any]:
    if not isinstance(value, list):
        raise SchemaError(f"expected a list, got {type(value).__name__}", path)
    return value


def decode_polynomial(value: Any, path: str, names: Sequence[str] = ("x", "y")) -> MultiPoly:
    """A polynomial from a grammar string or a term list."""
    if isinstance(value, str):
        try:
            return parse_polynomial(value, names)
        except PolynomialSyntaxError as exc:
            raise SchemaError(str(exc), path) from None
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for i, item in enumerate(_require_list(value, path)):
        item_path = f"{path}[{i}]"
        term = _require_object(item, item_path)
        unknown = set(term) - {"c", *names}
        if unknown:
            raise SchemaError(f"unknown keys {sorted(unknown)}", item_path)
        coeff = decode_rat(_require(term, "c", item_path), f"{item_path}.c")
        exps = tuple(decode_int(term.get(name, 0), f"{item_path}.{name}") for name in names)
        terms[exps] = terms.get(exps, Fraction(0)) + coeff
    return MultiPoly(len(names), terms)


def decode_series(value: Any, path: str) -> PuiseuxSeries:
    terms = {}
    for i, item in enumerate(_require_list(value, path)):
        item_path = f"{path}[{i}]"
        term = _require_object(item, item_path)
        exp = decode_rat(_require(term, "e", item_path), f"{item_path}.e")
        coeff = decode_rat(_require(term, "c", item_path), f"{item_path}.c")
        if exp in terms:
            raise SchemaError(f"exponent {exp} appears twice", item_path)
        terms[exp] = XiPoly.constant(coeff)
    return PuiseuxSeries(terms)


def _plane(value: Any, path: str) -> LaurentPoly2:
    return decode_polynomial(value, path).to_laurent2()


class TentacleEntry:
    """One decoded tentacle with whatever it was built from.

    Attributes:
        kind: The ``type`` field
        path: Location in the document
        tentacle: Resolved spec
        boundaries: ``(f1, f2)`` for boundary and plan entries
        plan: ``[(omega_k, c_k)]`` steps for plan entries
        sequence: Key forms built from the plan, last value assigned
        region: Inequalities of the planned region
    """

    def __init__(self, kind: str, path: str, tentacle: Tentacle):
        self.kind = kind
        self.path = path
        self.tentacle = tentacle
        self.boundaries: Optional[Tuple[LaurentPoly2, LaurentPoly2]] = None
        self.plan: List[Tuple[Fraction, Fraction]] = []
        self.sequence: Optional[KeyFormSequence] = None
        self.region: Optional[RegionDescription] = None

    def __repr__(self) -> str:
        return f"TentacleEntry({self.kind} at {self.path}: {self.tentacle})"


class InputDocument:
    """A decoded input file."""

    def __init__(
        self,
        entries: List[TentacleEntry],
        n: Optional[int] = None,
        genus_hint: Optional[int] = None,
        constraints: Optional[List[str]] = None,
    ):
        self.entries = entries
        self.n = n
        self.genus_hint = genus_hint
        self.constraints = constraints or []

    def tentacle_set(self) -> TentacleSet:
        return TentacleSet([e.tentacle for e in self.entries], self.n)

    def semidegree_specs(self) -> List[SemidegreeSpec]:
        return [e.tentacle for e in self.entries if isinstance(e.tentacle, SemidegreeSpec)]

    def single(self) -> TentacleEntry:
        if len(self.entries) != 1:
            raise InputError(f"expected exactly one tentacle, the document has {len(self.entries)}")
        return self.entries[0]

    def names(self) -> Tuple[str, ...]:
        return default_names(self.tentacle_set().ambient_dim)


def decode_tentacle(
    obj: Any,
    path: str,
    term_limit: int = DEFAULT_TERM_LIMIT,
    max_term_limit: int = DEFAULT_MAX_TERM_LIMIT,
) -> TentacleEntry:
    """Decode and resolve one tentacle object."""
    data = _require_object(obj, path)
    kind = _require(data, "type", path)
    if kind not in TENTACLE_TYPES:
        raise SchemaError(f"unknown tentacle type {kind!r}; expected one of {TENTACLE_TYPES}", path)
    if kind == "puiseux":
        phi = decode_series(data.get("phi", []), f"{path}.phi")
        omega = decode_rat(_require(data, "omega", path), f"{path}.omega")
        try:
            spec = SemidegreeSpec(phi, omega)
        except InputError as exc:
            raise SchemaError(str(exc), path) from None
        return TentacleEntry(kind, path, spec)
    if kind == "standard":
        raw_z = _require_list(_require(data, "z", path), f"{path}.z")
        z = [decode_int(v, f"{path}.z[{i}]") for i, v in enumerate(raw_z)]
        return TentacleEntry(kind, path, StandardTentacleSpec(z))
    if kind == "total_degree":
        return TentacleEntry(kind, path, SemidegreeSpec.total_degree())
    if kind == "boundaries":
        f1 = _plane(_require(data, "f1", path), f"{path}.f1")
        f2 = _plane(_require(data, "f2", path), f"{path}.f2")
        raw = data.get("branches", [None, None])
        branches = tuple(None if b is None else decode_int(b, f"{path}.branches") for b in raw)
        if len(branches) != 2:
            raise SchemaError("branches needs one entry per boundary", f"{path}.branches")
        spec = generic_series_from_boundaries(
            f1, f2, term_limit, (branches[0], branches[1]), max_term_limit
        )
        entry = TentacleEntry(kind, path, spec)
        entry.boundaries = (f1, f2)
        return entry
    steps = []
    for i, item in enumerate(_require_list(data.get("steps", []), f"{path}.steps")):
        step_path = f"{path}.steps[{i}]"
        step = _require_object(item, step_path)
        steps.append(
            (
                decode_rat(_require(step, "omega", step_path), f"{step_path}.omega"),
                decode_rat(_require(step, "c", step_path), f"{step_path}.c"),
            )
        )
    tail_path = f"{path}.tail"
    tail = _require_object(_require(data, "tail", path), tail_path)
    omega = decode_rat(_require(tail, "omega", tail_path), f"{tail_path}.omega")
    c1 = decode_rat(_require(tail, "c1", tail_path), f"{tail_path}.c1")
    c2 = decode_rat(_require(tail, "c2", tail_path), f"{tail_path}.c2")
    sequence = build_keyforms(steps)
    f1, f2, region = boundary_curves(sequence, omega, c1, c2)
    spec = generic_series_from_boundaries(f1, f2, term_limit, (None, None), max_term_limit)
    entry = TentacleEntry(kind, path, spec)
    entry.boundaries = (f1, f2)
    entry.plan = steps
    entry.sequence = sequence.with_last_value(omega)
    entry.region = region
    logger.debug("plan at %s gives boundaries %s and %s", path, f1, f2)
    return entry


def decode_document(
    data: Any,
    term_limit: int = DEFAULT_TERM_LIMIT,
    max_term_limit: int = DEFAULT_MAX_TERM_LIMIT,
) -> InputDocument:
    """Decode a parsed JSON value into an input document."""
    root = _require_object(data, "")
    if "tentacles" in root:
        items = _require_list(root["tentacles"], "tentacles")
        if not items:
            raise SchemaError("a tentacle set needs at least one tentacle", "tentacles")
        entries = [
            decode_tentacle(item, f"tentacles[{i}]", term_limit, max_term_limit)
            for i, item in enumerate(items)
        ]
    else:
        entries = [decode_tentacle(root, "$", term_limit, max_term_limit)]
    n = None if root.get("n") is None else decode_int(root["n"], "n")
    genus = None if root.get("genus_hint") is None else decode_int(root["genus_hint"], "genus_hint")
    constraints = _require_list(root.get("constraints", []), "constraints")
    for i, constraint in enumerate(constraints):
        if not isinstance(constraint, str):
            raise SchemaError("constraints are strings", f"constraints[{i}]")
    return InputDocument(entries, n, genus, constraints)


def load_document(
    source: Union[str, Path],
    term_limit: int = DEFAULT_TERM_LIMIT,
    max_term_limit: int = DEFAULT_MAX_TERM_LIMIT,
) -> InputDocument:
    """Read and decode a UTF-8 JSON file.

    Raises:
        SchemaError: With line and column for JSON syntax errors, or the
            field path for schema violations
    """
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    return loads_document(text, term_limit, max_term_limit)


def loads_document(
    text: str,
    term_limit: int = DEFAULT_TERM_LIMIT,
    max_term_limit: int = DEFAULT_MAX_TERM_LIMIT,
) -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(exc.msg, line=exc.lineno, column=exc.colno) from None
    return decode_document(data, term_limit, max_term_limit)
