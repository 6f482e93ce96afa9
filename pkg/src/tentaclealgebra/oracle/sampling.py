"""Floating-point growth estimates along curves inside a tentacle.

Nothing computed here feeds back into exact results; the estimates only
corroborate the exact values of delta_star.
"""
import logging
import random
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import mpmath
import numpy as np

from ..core.component import Component, positive_int_errors
from ..errors import DegenerateSampleError, InputError, ZeroPolynomialError
from ..exact.rational import RatLike, as_rat
from ..exact.series import LaurentPoly2, PuiseuxSeries
from ..puiseux.expansion import SemidegreeSpec
from ..semidegree.engine import delta_star

logger = logging.getLogger(__name__)

Boundaries = Tuple[PuiseuxSeries, PuiseuxSeries]

DEFAULT_PRECISION = 100


def _mpf(value: Fraction) -> mpmath.mpf:
    return mpmath.mpf(value.numerator) / value.denominator


def default_boundaries(spec: SemidegreeSpec) -> Boundaries:
    """``phi + x^omega`` and ``phi + 2 x^omega``, the curves with xi = 1 and xi = 2."""
    series = spec.generic_series()
    return series.at_xi(1), series.at_xi(2)


def evaluate_series(series: PuiseuxSeries, x: mpmath.mpf) -> mpmath.mpf:
    total = mpmath.mpf(0)
    for exp, coeff in series:
        total += _mpf(coeff.constant_value()) * mpmath.power(x, _mpf(exp))
    return total


def _interpolate(boundaries: Boundaries, t: Fraction, x: mpmath.mpf) -> mpmath.mpf:
    first, second = boundaries
    weight = _mpf(t)
    return (1 - weight) * evaluate_series(first, x) + weight * evaluate_series(second, x)


def curve_point(
    spec: SemidegreeSpec,
    t: RatLike,
    boundary_series: Optional[Boundaries] = None,
    x_value: RatLike = 1,
) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Point ``(x, (1 - t) * b1(x) + t * b2(x))`` on the interpolated curve.

    Args:
        spec: Tentacle spec; supplies the boundaries when none are given
        t: Interpolation parameter in [0, 1]
        boundary_series: xi-free series ``(b1, b2)`` of the two boundary curves
        x_value: Abscissa, at least 1
    """
    t = as_rat(t)
    x = as_rat(x_value)
    if not 0 <= t <= 1:
        raise InputError("t must lie in [0, 1]")
    if x < 1:
        raise InputError("x must be at least 1")
    xm = _mpf(x)
    return xm, _interpolate(boundary_series or default_boundaries(spec), t, xm)


def geometric_grid(x_min_log2: float, x_max_log2: float, points: int) -> List[float]:
    """``points`` abscissae spaced evenly in log scale between the two powers of 2."""
    if points < 2 or x_max_log2 <= x_min_log2:
        raise InputError("a grid needs at least two points and a non-empty range")
    return [float(v) for v in np.exp2(np.linspace(x_min_log2, x_max_log2, points))]


def _slope(
    f: LaurentPoly2, boundaries: Boundaries, t: Fraction, x_grid: Sequence[float]
) -> Optional[float]:
    logs_x, logs_f = [], []
    for x in x_grid:
        xm = mpmath.mpf(x)
        y = _interpolate(boundaries, t, xm)
        value = mpmath.fsum(
            _mpf(c) * mpmath.power(xm, a) * mpmath.power(y, b) for (a, b), c in f.terms.items()
        )
        if value == 0:
            continue
        logs_x.append(float(mpmath.log(xm)))
        logs_f.append(float(mpmath.log(abs(value))))
    if len(logs_x) < 2:
        return None
    slope, _ = np.polyfit(np.array(logs_x), np.array(logs_f), 1)
    return float(slope)


def growth_exponent(
    spec: SemidegreeSpec,
    f: LaurentPoly2,
    x_grid: Sequence[float],
    t_grid: Sequence[RatLike],
    boundary_series: Optional[Boundaries] = None,
    precision: int = DEFAULT_PRECISION,
) -> float:
    """Largest fitted slope of ``log|f|`` against ``log x`` over the t-curves, clamped at 0.

    Raises:
        DegenerateSampleError: If ``f`` vanishes at every sampled point
    """
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no growth exponent")
    if not x_grid or not t_grid:
        raise InputError("growth_exponent needs non-empty grids")
    boundaries = boundary_series or default_boundaries(spec)
    slopes = []
    with mpmath.workdps(precision):
        for t in t_grid:
            slope = _slope(f, boundaries, as_rat(t), x_grid)
            if slope is not None:
                slopes.append(slope)
    if not slopes:
        raise DegenerateSampleError(f"degenerate sample: {f} vanishes on every sampled point")
    return max(0.0, max(slopes))


def random_t_grid(rng: random.Random, samples: int) -> List[Fraction]:
    """Parameters drawn from (0, 1) with denominator 1000."""
    return [Fraction(rng.randint(1, 999), 1000) for _ in range(samples)]


def corroborate(
    spec: SemidegreeSpec,
    f: LaurentPoly2,
    seed: int = 0,
    retries: int = 5,
    tolerance: float = 0.1,
    x_grid: Optional[Sequence[float]] = None,
    t_samples: int = 5,
    precision: int = DEFAULT_PRECISION,
) -> Dict[str, Any]:
    """Compare the sampled growth with ``max(0, delta_star)``, redrawing t on disagreement."""
    expected = float(max(Fraction(0), delta_star(spec, f)))
    grid = list(x_grid) if x_grid is not None else geometric_grid(10, 14, 9)
    rng = random.Random(seed)
    estimate = None
    attempts = 0
    for attempts in range(1, retries + 2):
        try:
            t_grid = random_t_grid(rng, t_samples)
            estimate = growth_exponent(spec, f, grid, t_grid, None, precision)
        except DegenerateSampleError:
            logger.info("degenerate sample for %s, redrawing t", f)
            continue
        if abs(estimate - expected) <= tolerance:
            break
        logger.info("estimate %.4f for %s is off from %.4f, redrawing t", estimate, f, expected)
    agrees = estimate is not None and abs(estimate - expected) <= tolerance
    return {"expected": expected, "estimate": estimate, "agrees": agrees, "attempts": attempts}


class GrowthOracle(Component):
    """Sampling engine with a seeded generator."""

    defaults = {
        "seed": 0,
        "precision": DEFAULT_PRECISION,
        "tolerance": 0.1,
        "retries": 5,
        "x_min_log2": 10,
        "x_max_log2": 14,
        "x_points": 9,
        "t_samples": 5,
    }

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("oracle", config)

    def config_errors(self) -> List[str]:
        errors = positive_int_errors(self.config, "precision", "x_points", "t_samples")
        if not isinstance(self.config.get("seed"), int):
            errors.append("seed must be an integer")
        retries = self.config.get("retries")
        if isinstance(retries, bool) or not isinstance(retries, int) or retries < 0:
            errors.append("retries must be a non-negative integer")
        if not self.config.get("tolerance", 0) > 0:
            errors.append("tolerance must be positive")
        if not self.config.get("x_max_log2", 0) > self.config.get("x_min_log2", 0) >= 0:
            errors.append("x_min_log2 must be non-negative and below x_max_log2")
        return errors

    def grid(self) -> List[float]:
        return geometric_grid(
            self.config["x_min_log2"], self.config["x_max_log2"], self.config["x_points"]
        )

    def estimate(self, spec: SemidegreeSpec, f: LaurentPoly2, seed: Optional[int] = None) -> float:
        rng = random.Random(self.setting("seed", seed))
        t_grid = random_t_grid(rng, self.config["t_samples"])
        return growth_exponent(spec, f, self.grid(), t_grid, None, self.config["precision"])

    def corroborate(
        self, spec: SemidegreeSpec, f: LaurentPoly2, seed: Optional[int] = None
    ) -> Dict[str, Any]:
        return corroborate(
            spec,
            f,
            seed=self.setting("seed", seed),
            retries=self.config["retries"],
            tolerance=self.config["tolerance"],
            x_grid=self.grid(),
            t_samples=self.config["t_samples"],
            precision=self.config["precision"],
        )
