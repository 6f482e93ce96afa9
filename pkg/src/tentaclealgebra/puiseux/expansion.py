"""Puiseux expansions at infinity and generic series of a tentacle."""
import logging
from fractions import Fraction
from functools import cmp_to_key
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Poly, Rational, Symbol

from ..core.component import Component, positive_int_errors
from ..errors import (
    DegenerateTentacleError,
    InputError,
    InsufficientPrecisionError,
    NoBranchError,
    NonRationalBranchError,
)
from ..exact.rational import RatLike, XiPoly, as_rat, format_rat, lcm
from ..exact.series import LaurentPoly2, PuiseuxSeries, SeriesPolyY

logger = logging.getLogger(__name__)

DEFAULT_TERM_LIMIT = 32
DEFAULT_MAX_TERM_LIMIT = 128

_Z = Symbol("z")


class SemidegreeSpec:
    """Generic degree-wise Puiseux series ``phi(x) + xi * x^omega``.

    A spec flagged ``is_total_degree`` stands for the total degree; its
    ``phi`` and ``omega`` are ignored.

    Args:
        phi: xi-free finite Puiseux series
        omega: Exponent of the generic term, below every exponent of ``phi``
        is_total_degree: Whether the spec denotes the total degree
    """

    def __init__(
        self,
        phi: Optional[PuiseuxSeries] = None,
        omega: RatLike = 0,
        is_total_degree: bool = False,
    ):
        self.phi = phi if phi is not None else PuiseuxSeries.zero()
        self.omega = as_rat(omega)
        self.is_total_degree = is_total_degree
        if is_total_degree:
            return
        if not self.phi.is_xi_free():
            raise InputError(f"phi must not involve xi: {self.phi}")
        lowest = self.phi.lowest_exponent()
        if lowest is not None and self.omega >= lowest:
            raise InputError(
                f"omega = {format_rat(self.omega)} must be below the lowest exponent "
                f"{format_rat(lowest)} of phi"
            )

    @classmethod
    def total_degree(cls) -> "SemidegreeSpec":
        return cls(is_total_degree=True)

    def generic_series(self) -> PuiseuxSeries:
        """The series ``phi + xi * x^omega`` to substitute for y."""
        if self.is_total_degree:
            raise InputError("the total-degree spec has no generic series")
        return self.phi + PuiseuxSeries.generic_monomial(self.omega)

    @property
    def ram(self) -> int:
        if self.is_total_degree:
            return 1
        return lcm(self.phi.ram, self.omega.denominator)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SemidegreeSpec):
            return NotImplemented
        if self.is_total_degree or other.is_total_degree:
            return self.is_total_degree == other.is_total_degree
        return self.phi == other.phi and self.omega == other.omega

    def __hash__(self) -> int:
        if self.is_total_degree:
            return hash("total_degree")
        return hash((self.phi, self.omega))

    def __repr__(self) -> str:
        if self.is_total_degree:
            return "SemidegreeSpec(total_degree)"
        return f"SemidegreeSpec(phi={self.phi}, omega={format_rat(self.omega)})"


class Branch:
    """One branch of a plane curve along which x tends to +infinity.

    Args:
        series: Real part of the expansion computed so far
        exact: The series is the whole branch (it terminated)
        real: False for a conjugate family of complex branches
        conjugates: Number of complex branches a non-real entry stands for
        complex_exponent: Exponent at which the coefficient becomes non-real
        minimal_polynomial: Coefficients (descending) of the polynomial whose
            roots are the non-real coefficients
    """

    def __init__(
        self,
        series: PuiseuxSeries,
        exact: bool,
        real: bool = True,
        conjugates: int = 1,
        complex_exponent: Optional[Fraction] = None,
        minimal_polynomial: Sequence[Fraction] = (),
    ):
        self.series = series
        self.exact = exact
        self.real = real
        self.conjugates = conjugates
        self.complex_exponent = complex_exponent
        self.minimal_polynomial = tuple(minimal_polynomial)

    @property
    def known_floor(self) -> Optional[Fraction]:
        """Coefficients are known at every exponent at or above this; None if exact."""
        if self.exact:
            return None
        return self.series.lowest_exponent()

    def __repr__(self) -> str:
        kind = "exact" if self.exact else "truncated"
        if not self.real:
            return f"Branch({self.series} + complex*x^{format_rat(self.complex_exponent)})"
        return f"Branch({self.series}, {kind})"


def newton_edges(g: SeriesPolyY) -> List[Tuple[Fraction, List[int]]]:
    """Edges of the Newton polygon at infinity of ``g``.

    Each edge is reported as ``(e, support)``: along a branch ``y ~ c x^e``
    the terms ``a_j y^j`` with ``j`` in ``support`` dominate together.
    Edges come out with increasing ``e``.
    """
    points = [
        (j, coeff.leading_term()[0]) for j, coeff in enumerate(g.coeffs) if not coeff.is_zero()
    ]
    edges: List[Tuple[Fraction, List[int]]] = []
    i = 0
    while i < len(points) - 1:
        j0, t0 = points[i]
        best_slope = None
        best_index = i
        for k in range(i + 1, len(points)):
            jk, tk = points[k]
            slope = (tk - t0) / (jk - j0)
            if best_slope is None or slope >= best_slope:
                best_slope, best_index = slope, k
        e = -best_slope
        level = t0 + j0 * e
        support = [j for j, t in points[i:best_index + 1] if t + j * e == level]
        edges.append((e, support))
        i = best_index
    return edges


def _characteristic_roots(
    coeffs: Dict[int, Fraction]
) -> Tuple[List[Fraction], List[Tuple[int, List[Fraction]]]]:
    """Rational roots and non-real factors of ``sum coeffs[k] z^k``."""
    expr = sum(Rational(c.numerator, c.denominator) * _Z ** k for k, c in coeffs.items())
    _, factors = Poly(expr, _Z, domain="QQ").factor_list()
    roots: List[Fraction] = []
    complex_factors: List[Tuple[int, List[Fraction]]] = []
    for factor, _multiplicity in factors:
        all_coeffs = [Fraction(int(c.p), int(c.q)) for c in factor.all_coeffs()]
        if factor.degree() == 1:
            roots.append(-all_coeffs[1] / all_coeffs[0])
        elif factor.count_roots() > 0:
            raise NonRationalBranchError(
                f"non-rational branch: characteristic factor {factor.as_expr()} has "
                "real roots that are not rational"
            )
        else:
            complex_factors.append((factor.degree(), all_coeffs))
    roots.sort(reverse=True)
    return roots, complex_factors


def expand_at_infinity(f: LaurentPoly2, term_limit: int = DEFAULT_TERM_LIMIT) -> List[Branch]:
    """Degree-wise Puiseux expansions ``y = phi_i(x)`` of ``f(x, y) = 0`` for x -> +infinity.

    Real branches carry real rational coefficients and are either exact (the
    expansion terminated) or truncated after ``term_limit`` terms. Each
    family of conjugate complex branches is reported once with
    ``real=False``. Real branches come first, from the top branch down.

    Args:
        f: Laurent polynomial of positive y-degree
        term_limit: Maximum number of terms per branch

    Returns:
        List of branches

    Raises:
        NoBranchError: If ``f`` does not depend on y
        NonRationalBranchError: If a real coefficient would be irrational
    """
    if term_limit < 1:
        raise InputError(f"term_limit must be at least 1, got {term_limit}")
    if f.deg_y() < 1:
        raise NoBranchError(f"no branch: {f} does not depend on y")

    branches: List[Branch] = []
    stack: List[Tuple[List[Tuple[Fraction, XiPoly]], SeriesPolyY, Optional[Fraction]]] = [
        ([], SeriesPolyY.from_laurent(f), None)
    ]
    while stack:
        terms, g, bound = stack.pop()
        prefix = PuiseuxSeries(terms)
        order = g.low_order()
        if order:
            branches.append(Branch(prefix, exact=True))
            g = g.divide_by_y_power(order)
            if g.degree() < 1:
                continue
        if len(terms) >= term_limit:
            branches.append(Branch(prefix, exact=False))
            continue
        for e, support in newton_edges(g):
            if bound is not None and e >= bound:
                continue
            base = support[0]
            char = {j - base: g.coeffs[j].leading_term()[1].constant_value() for j in support}
            roots, complex_factors = _characteristic_roots(char)
            logger.debug("newton step at x^%s: roots %s", format_rat(e), roots)
            for root in reversed(roots):
                step = PuiseuxSeries.monomial(root, e)
                stack.append((terms + [(e, XiPoly.constant(root))], g.shift(step), e))
            for degree, poly in complex_factors:
                branches.append(
                    Branch(
                        prefix,
                        exact=False,
                        real=False,
                        conjugates=degree,
                        complex_exponent=e,
                        minimal_polynomial=poly,
                    )
                )
    real = sorted((b for b in branches if b.real), key=cmp_to_key(_loose_compare), reverse=True)
    return real + [b for b in branches if not b.real]


def _value(series: PuiseuxSeries, exp: Fraction) -> Fraction:
    coeff = series.coefficient(exp)
    return Fraction(0) if coeff.is_zero() else coeff.constant_value()


def _loose_compare(a: Branch, b: Branch) -> int:
    for exp in sorted(set(a.series.exponents()) | set(b.series.exponents()), reverse=True):
        va, vb = _value(a.series, exp), _value(b.series, exp)
        if va != vb:
            return 1 if va > vb else -1
    return 0


def first_divergence(
    a: Branch, b: Branch, term_limit: int = DEFAULT_TERM_LIMIT
) -> Tuple[Fraction, int]:
    """Highest exponent where two real branches differ, and the sign of ``a - b`` there.

    Raises:
        DegenerateTentacleError: If both branches are exact and equal
        InsufficientPrecisionError: If they agree on every known coefficient
    """
    floors = [fl for fl in (a.known_floor, b.known_floor) if fl is not None]
    floor = max(floors) if floors else None
    exponents = sorted(set(a.series.exponents()) | set(b.series.exponents()), reverse=True)
    for exp in exponents:
        if floor is not None and exp < floor:
            break
        va, vb = _value(a.series, exp), _value(b.series, exp)
        if va != vb:
            return exp, (1 if va > vb else -1)
    if floor is None:
        raise DegenerateTentacleError("degenerate tentacle: both boundaries define the same branch")
    raise InsufficientPrecisionError(
        f"insufficient precision: branches agree on all {term_limit} computed terms", term_limit
    )


def top_branch(branches: Sequence[Branch], term_limit: int = DEFAULT_TERM_LIMIT) -> Branch:
    """The real branch lying above all others for large x."""
    real = [b for b in branches if b.real]
    if not real:
        raise NoBranchError("no branch: the curve has no real branch to x -> +infinity")
    best = real[0]
    for candidate in real[1:]:
        _, sign = first_divergence(candidate, best, term_limit)
        if sign > 0:
            best = candidate
    return best


def _direction(branch: Branch) -> Tuple[Any, ...]:
    """Point where the branch meets the line at infinity."""
    if branch.series.is_zero():
        return ("horizontal",)
    exp, coeff = branch.series.leading_term()
    if exp < 1:
        return ("horizontal",)
    if exp == 1:
        return ("slope", coeff.constant_value())
    return ("vertical",)


def _select_branch(f: LaurentPoly2, index: Optional[int], term_limit: int) -> Branch:
    branches = expand_at_infinity(f, term_limit)
    real = [b for b in branches if b.real]
    if not real:
        raise NoBranchError(f"no branch: {f} = 0 has no real branch to x -> +infinity")
    if index is None:
        return top_branch(real, term_limit)
    if not 0 <= index < len(real):
        raise InputError(f"branch index {index} out of range; {f} has {len(real)} real branches")
    return real[index]


def _proportional(f1: LaurentPoly2, f2: LaurentPoly2) -> bool:
    """Whether ``f2`` is a non-zero rational multiple of ``f1``."""
    if f1.is_zero() or f2.is_zero():
        return False
    key = next(iter(f1.terms))
    ratio = f2.coefficient(*key) / f1.coefficient(*key)
    return ratio != 0 and f1.scale(ratio) == f2


def _generic_series(
    f1: LaurentPoly2,
    f2: LaurentPoly2,
    term_limit: int,
    branches: Tuple[Optional[int], Optional[int]],
) -> SemidegreeSpec:
    b1 = _select_branch(f1, branches[0], term_limit)
    b2 = _select_branch(f2, branches[1], term_limit)
    if _proportional(f1, f2) and b1.series == b2.series and b1.exact == b2.exact:
        raise DegenerateTentacleError(
            "degenerate tentacle: both boundaries select the same branch of one curve"
        )
    if _direction(b1) != _direction(b2):
        logger.debug("boundaries reach infinity in different directions: total degree")
        return SemidegreeSpec.total_degree()
    omega, _ = first_divergence(b1, b2, term_limit)
    return SemidegreeSpec(b1.series.above(omega), omega)


def generic_series_from_boundaries(
    f1: LaurentPoly2,
    f2: LaurentPoly2,
    term_limit: int = DEFAULT_TERM_LIMIT,
    branches: Tuple[Optional[int], Optional[int]] = (None, None),
    max_term_limit: int = DEFAULT_MAX_TERM_LIMIT,
) -> SemidegreeSpec:
    """Generic series ``(phi, omega)`` of the tentacle between two boundary curves.

    ``phi`` is the common part of the two branch expansions and ``omega`` the
    first exponent at which they differ. Branches meeting the line at
    infinity in different points give the total-degree spec. When the
    expansions are too short to separate, the term limit is doubled up to
    ``max_term_limit``.

    Args:
        f1: First boundary
        f2: Second boundary
        term_limit: Initial number of terms per branch
        branches: Index of the real branch to use for each boundary; None
            selects the top branch
        max_term_limit: Largest term limit tried before giving up

    Returns:
        SemidegreeSpec of the tentacle
    """
    limit = term_limit
    while True:
        try:
            return _generic_series(f1, f2, limit, branches)
        except InsufficientPrecisionError:
            if limit * 2 > max_term_limit:
                raise
            limit *= 2
            logger.info("branches not separated yet, retrying with term limit %d", limit)


class PuiseuxExpander(Component):
    """Engine wrapping the expansion routines with a configured term limit."""

    defaults = {"term_limit": DEFAULT_TERM_LIMIT, "max_term_limit": DEFAULT_MAX_TERM_LIMIT}

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("puiseux", config)

    def config_errors(self) -> List[str]:
        errors = positive_int_errors(self.config, "term_limit", "max_term_limit")
        if not errors and self.config["max_term_limit"] < self.config["term_limit"]:
            errors.append("max_term_limit must not be smaller than term_limit")
        return errors

    def expand(self, f: LaurentPoly2, term_limit: Optional[int] = None) -> List[Branch]:
        return expand_at_infinity(f, self.setting("term_limit", term_limit))

    def generic_series(
        self,
        f1: LaurentPoly2,
        f2: LaurentPoly2,
        term_limit: Optional[int] = None,
        branches: Tuple[Optional[int], Optional[int]] = (None, None),
    ) -> SemidegreeSpec:
        limit = self.setting("term_limit", term_limit)
        return generic_series_from_boundaries(
            f1, f2, limit, branches, max(limit, self.setting("max_term_limit"))
        )
