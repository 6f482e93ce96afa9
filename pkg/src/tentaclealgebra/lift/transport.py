"""Graded lift of B(S) to bounded polynomials on a set one dimension up.

``p`` in ``B_d(S)`` corresponds to ``p * t^d``, which is bounded on
``S' = {(a, s) : a in S, |a| >= 1, |a|^2 s^2 <= 1}``.
"""
import logging
import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import mpmath

from ..errors import InputError
from ..exact.linalg import inverse
from ..exact.multipoly import MultiPoly, default_names
from ..exact.rational import RatLike, as_rat
from ..semidegree.engine import TentacleSet, delta_S

logger = logging.getLogger(__name__)


class GradedElement:
    """A polynomial ``poly`` placed in degree ``level`` of B(S)."""

    def __init__(self, poly: MultiPoly, level: int):
        if isinstance(level, bool) or not isinstance(level, int) or level < 0:
            raise InputError(f"level must be a non-negative integer, got {level!r}")
        self.poly = poly
        self.level = level

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.poly == other.poly and self.level == other.level

    def __repr__(self) -> str:
        return f"GradedElement({self.poly}, level={self.level})"


def lift_element(e: GradedElement) -> MultiPoly:
    """``p(x) * t^d`` as a polynomial in ``(x_1, ..., x_n, t)``."""
    t_power = MultiPoly.monomial((0,) * e.poly.nvars + (e.level,))
    return e.poly.extend(1) * t_power


def lifted_set_description(constraints: Sequence[str], n: int) -> List[str]:
    """Constraints of S' from those of S: ``|a| >= 1`` and ``|a|^2 t^2 <= 1`` appended."""
    if n < 1:
        raise InputError("the ambient dimension must be positive")
    norm = " + ".join(f"{name}^2" for name in default_names(n))
    return list(constraints) + [f"{norm} >= 1", f"({norm})*t^2 <= 1"]


def coefficient_bound(d: int, C: RatLike) -> List[Fraction]:
    """Bounds on the coefficients of a degree-d polynomial with ``|p| <= C`` on [0, 1].

    The values ``p(1/k)`` for ``k = 1, ..., d + 1`` determine ``p``; the bound
    on coefficient j is C times the absolute row sum of the inverted node matrix.
    """
    if d < 0:
        raise InputError(f"d must be non-negative, got {d}")
    bound = as_rat(C)
    if bound <= 0:
        raise InputError("C must be positive")
    nodes = [Fraction(1, k) for k in range(1, d + 2)]
    vandermonde = [[node ** j for j in range(d + 1)] for node in nodes]
    inv = inverse(vandermonde)
    return [bound * sum((abs(v) for v in row), Fraction(0)) for row in inv]


def split_lifted(q: MultiPoly) -> Dict[int, MultiPoly]:
    """Pieces ``p_i`` of ``q = sum p_i t^i``, keyed by i."""
    return q.split_last()


def lift_membership(q: MultiPoly, S: TentacleSet) -> Dict[int, bool]:
    """Whether each graded piece ``p_i`` of ``q`` satisfies ``delta_S(p_i) <= i``."""
    if q.nvars != S.ambient_dim + 1:
        raise InputError(
            f"a lifted polynomial has {S.ambient_dim + 1} variables, got {q.nvars}"
        )
    verdict = {}
    for level, piece in split_lifted(q).items():
        verdict[level] = delta_S(S, piece) <= level
        logger.debug("piece of t^%d: %s", level, piece)
    return verdict


def _mpf(value: Fraction) -> mpmath.mpf:
    return mpmath.mpf(value.numerator) / value.denominator


def sample_lifted_values(
    element: GradedElement,
    points: Sequence[Sequence[RatLike]],
    rng: Optional[random.Random] = None,
    precision: int = 30,
) -> List[float]:
    """``|p(a) * s^d|`` at the given points ``a`` with s drawn from ``|s| <= 1/|a|``.

    Points with ``|a| < 1`` are not in S' and are skipped.
    """
    rng = rng or random.Random(0)
    values = []
    with mpmath.workdps(precision):
        for point in points:
            coords = [_mpf(as_rat(v)) for v in point]
            norm = mpmath.sqrt(mpmath.fsum(c * c for c in coords))
            if norm < 1:
                continue
            s = (2 * rng.random() - 1) / norm
            value = element.poly.evaluate(coords, _mpf)
            values.append(float(abs(value * s ** element.level)))
    return values
