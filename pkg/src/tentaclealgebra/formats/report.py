"""Rendering of command results as canonical JSON or rich text."""
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List

from rich.console import Console
from rich.table import Table

from ..exact.multipoly import MultiPoly
from ..exact.rational import XiPoly, format_rat
from ..exact.series import LaurentPoly2, PuiseuxSeries


def series_terms(series: PuiseuxSeries) -> List[Dict[str, Any]]:
    """``[{"c": ..., "e": ...}]`` for a xi-free series, ``"xi"`` terms kept as text."""
    terms = []
    for exp, coeff in series:
        value: Any = format_rat(coeff.constant_value()) if coeff.is_constant() else str(coeff)
        terms.append({"c": value, "e": format_rat(exp)})
    return terms


def to_jsonable(value: Any) -> Any:
    """Convert exact values into JSON-ready data with rationals as ``"p/q"`` strings."""
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rat(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (LaurentPoly2, MultiPoly, XiPoly)):
        return str(value)
    if isinstance(value, PuiseuxSeries):
        return series_terms(value)
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return str(value)


def render_json(report: Dict[str, Any]) -> str:
    """Byte-stable JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_jsonable(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_text(report: Dict[str, Any], console: Console, title: str = "") -> None:
    """Print a report as a two-column table."""
    table = Table(title=title or None, show_header=False)
    table.add_column("field", style="bold cyan")
    table.add_column("value")
    for key, value in sorted(to_jsonable(report).items()):
        if isinstance(value, (dict, list)):
            text = json.dumps(value, sort_keys=True, ensure_ascii=False)
        else:
            text = "null" if value is None else str(value)
        table.add_row(key, text)
    console.print(table)
