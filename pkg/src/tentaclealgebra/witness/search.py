"""Exact search for plane polynomials whose growth on tentacles stays below a level.

A polynomial ``p`` with unknown coefficients over all monomials of weighted
degree at most D is substituted into the generic series of every tentacle.
Each xi-coefficient at an x-exponent above the level gives one linear
condition; the solution space is returned in reduced echelon form.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.component import Component
from ..errors import ComputationError, InputError
from ..exact.linalg import canonical_basis, nullspace
from ..exact.rational import RatLike, as_rat, format_rat
from ..exact.series import LaurentPoly2, PuiseuxSeries, shift_y
from ..puiseux.expansion import SemidegreeSpec
from ..semidegree.engine import delta_star

logger = logging.getLogger(__name__)

Grading = Tuple[Fraction, Fraction]
Monomial = Tuple[int, int]

DEFAULT_GRADING = ("1", "1")


def as_grading(grading: Sequence[RatLike]) -> Grading:
    if len(grading) != 2:
        raise InputError(f"a plane grading has two weights, got {list(grading)}")
    wx, wy = (as_rat(w) for w in grading)
    if wx <= 0 or wy <= 0:
        raise InputError("grading weights must be positive")
    return wx, wy


def graded_degree(grading: Sequence[RatLike], f: LaurentPoly2) -> Fraction:
    """Largest ``w_x * a + w_y * b`` over the support of ``f``."""
    wx, wy = as_grading(grading)
    return max(wx * a + wy * b for a, b in f.terms)


def leading_form(grading: Sequence[RatLike], f: LaurentPoly2) -> LaurentPoly2:
    """Part of ``f`` of top weighted degree."""
    wx, wy = as_grading(grading)
    top = graded_degree((wx, wy), f)
    return LaurentPoly2({(a, b): c for (a, b), c in f.terms.items() if wx * a + wy * b == top})


def monomial_columns(D: RatLike, grading: Sequence[RatLike] = DEFAULT_GRADING) -> List[Monomial]:
    """Monomials ``x^a y^b`` of weighted degree at most D.

    Ordered by descending weighted degree, ties by descending y-exponent, so
    the pivot of every echelon row is its leading monomial.
    """
    wx, wy = as_grading(grading)
    bound = as_rat(D)
    if bound < 0:
        raise InputError(f"D must be non-negative, got {format_rat(bound)}")
    columns = []
    b = 0
    while wy * b <= bound:
        a = 0
        while wx * a + wy * b <= bound:
            columns.append((a, b))
            a += 1
        b += 1
    return sorted(columns, key=lambda m: (-(wx * m[0] + wy * m[1]), -m[1]))


def _conditions(
    spec: SemidegreeSpec, d: Fraction, columns: Sequence[Monomial]
) -> Dict[Tuple[Fraction, int], Dict[int, Fraction]]:
    """Linear conditions ``{(exponent, xi power): {column: coefficient}}`` for one spec."""
    rows: Dict[Tuple[Fraction, int], Dict[int, Fraction]] = {}
    if spec.is_total_degree:
        for col, (a, b) in enumerate(columns):
            if a + b > d:
                rows[(Fraction(a + b), col)] = {col: Fraction(1)}
        return rows
    series = spec.generic_series()
    top = max(b for _, b in columns) if columns else 0
    powers = [PuiseuxSeries.constant(1)]
    for _ in range(top):
        powers.append(powers[-1] * series)
    for col, (a, b) in enumerate(columns):
        for exp, coeff in powers[b].shift_exponent(a):
            if exp <= d:
                continue
            for xi_power, value in enumerate(coeff.coeffs):
                if value:
                    rows.setdefault((exp, xi_power), {})[col] = value
    return rows


def low_degree_space(
    specs: Sequence[SemidegreeSpec],
    d: RatLike,
    D: RatLike,
    grading: Sequence[RatLike] = DEFAULT_GRADING,
) -> List[LaurentPoly2]:
    """Basis of ``{p : deg_w(p) <= D and delta_star(spec, p) <= d for every spec}``.

    Args:
        specs: Tentacle specs, total-degree specs allowed
        d: Growth level, possibly rational
        D: Bound on the weighted degree
        grading: Weights ``(w_x, w_y)`` of the degree

    Returns:
        Reduced echelon basis; each element's pivot is its leading monomial
    """
    if not specs:
        raise InputError("low_degree_space needs at least one spec")
    level = as_rat(d)
    columns = monomial_columns(D, grading)
    index: Dict[Tuple[int, Tuple[Fraction, int]], Dict[int, Fraction]] = {}
    for i, spec in enumerate(specs):
        for key, row in _conditions(spec, level, columns).items():
            index[(i, key)] = row
    ncols = len(columns)
    matrix = [[row.get(col, Fraction(0)) for col in range(ncols)] for row in index.values()]
    logger.debug("witness system: %d conditions on %d monomials", len(matrix), ncols)
    if matrix:
        solutions = nullspace(matrix, ncols)
    else:
        solutions = [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    basis = [
        LaurentPoly2({columns[j]: v for j, v in enumerate(vector) if v})
        for vector in canonical_basis(solutions, ncols)
    ]
    for element in basis:
        for spec in specs:
            if not spec.is_total_degree and delta_star(spec, element) > level:
                raise ComputationError(
                    f"basis element {element} grows faster than {format_rat(level)}"
                )
    return basis


def counterexample_witness(
    specs: Sequence[SemidegreeSpec],
    d: RatLike,
    D_min: RatLike,
    D_max: RatLike,
    grading: Sequence[RatLike] = DEFAULT_GRADING,
) -> Optional[LaurentPoly2]:
    """First basis element of weighted degree at least ``D_min``, or None."""
    if as_rat(D_min) > as_rat(D_max):
        raise InputError("D_min must not exceed D_max")
    for element in low_degree_space(specs, d, D_max, grading):
        if graded_degree(grading, element) >= as_rat(D_min):
            return element
    return None


def dimension_profile(
    specs: Sequence[SemidegreeSpec],
    d: RatLike,
    D_list: Sequence[RatLike],
    grading: Sequence[RatLike] = DEFAULT_GRADING,
) -> List[int]:
    """Dimensions of ``low_degree_space`` along ``D_list``."""
    return [len(low_degree_space(specs, d, D, grading)) for D in D_list]


def strictly_increasing(dims: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(dims, dims[1:]))


def recentre(f: LaurentPoly2, spec: SemidegreeSpec) -> LaurentPoly2:
    """``f(x, y + phi)`` with y kept as a variable."""
    return shift_y(f, spec.phi)


def newton_line_residues(f: LaurentPoly2) -> List[int]:
    """Residues mod 5 of the (1, -2)-degrees of the monomials of ``f``."""
    return sorted({(a - 2 * b) % 5 for a, b in f.terms})


class WitnessSearch(Component):
    """Engine for bounded-growth searches."""

    defaults = {"grading": list(DEFAULT_GRADING)}

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("witness", config)

    def config_errors(self) -> List[str]:
        try:
            as_grading(self.config.get("grading", ()))
        except (InputError, TypeError) as exc:
            return [f"grading: {exc}"]
        return []

    def space(
        self,
        specs: Sequence[SemidegreeSpec],
        d: RatLike,
        D: RatLike,
        grading: Optional[Sequence[RatLike]] = None,
    ) -> List[LaurentPoly2]:
        return low_degree_space(specs, d, D, self.setting("grading", grading))

    def witness(
        self,
        specs: Sequence[SemidegreeSpec],
        d: RatLike,
        D_min: RatLike,
        D_max: RatLike,
        grading: Optional[Sequence[RatLike]] = None,
    ) -> Optional[LaurentPoly2]:
        return counterexample_witness(specs, d, D_min, D_max, self.setting("grading", grading))

    def profile(
        self,
        specs: Sequence[SemidegreeSpec],
        d: RatLike,
        D_list: Sequence[RatLike],
        grading: Optional[Sequence[RatLike]] = None,
    ) -> List[int]:
        return dimension_profile(specs, d, D_list, self.setting("grading", grading))
