"""Tests for the sampling oracle."""
import random
import mpmath
import pytest
from fractions import Fraction
from tentaclealgebra.errors import InputError, ZeroPolynomialError
from tentaclealgebra.exact.rational import XiPoly
from tentaclealgebra.exact.series import LaurentPoly2, PuiseuxSeries
from tentaclealgebra.oracle.sampling import (
    GrowthOracle,
    corroborate,
    curve_point,
    default_boundaries,
    geometric_grid,
    growth_exponent,
    random_t_grid,
)
from tentaclealgebra.puiseux.expansion import SemidegreeSpec


X = LaurentPoly2.x()
Y = LaurentPoly2.y()


def series(*terms):
    return PuiseuxSeries([(Fraction(e), XiPoly.constant(c)) for c, e in terms])


@pytest.fixture
def lower():
    return SemidegreeSpec(series((-1, 3), (1, -2)), -3)


@pytest.fixture
def upper():
    return SemidegreeSpec(series((1, 3), (1, -2)), -3)


def test_default_boundaries(lower):
    """Test the curves at xi = 1 and xi = 2."""
    first, second = default_boundaries(lower)
    assert first == series((-1, 3), (1, -2), (1, -3))
    assert second == series((-1, 3), (1, -2), (2, -3))


def test_curve_point(lower):
    """Test a point on the lower boundary."""
    x, y = curve_point(lower, 0, x_value=4)
    assert x == 4
    assert y == mpmath.mpf("-63.921875")


def test_curve_point_ranges(lower):
    """Test the ranges of t and x."""
    with pytest.raises(InputError):
        curve_point(lower, "3/2")
    with pytest.raises(InputError):
        curve_point(lower, 0, x_value="1/2")


def test_geometric_grid():
    """Test log-spaced abscissae."""
    assert geometric_grid(0, 2, 3) == [1.0, 2.0, 4.0]
    with pytest.raises(InputError):
        geometric_grid(2, 2, 3)
    with pytest.raises(InputError):
        geometric_grid(0, 2, 1)


def test_random_t_grid():
    """Test that parameters stay strictly inside (0, 1)."""
    grid = random_t_grid(random.Random(5), 20)
    assert len(grid) == 20
    assert all(0 < t < 1 for t in grid)
    assert grid == random_t_grid(random.Random(5), 20)


def test_growth_exponent_matches_delta_star(upper):
    """Test the fitted slope of y^2 - x^6 and of y."""
    grid = geometric_grid(10, 14, 5)
    t_grid = [Fraction(1, 2)]
    assert growth_exponent(upper, Y ** 2 - X ** 6, grid, t_grid) == pytest.approx(1, abs=0.05)
    assert growth_exponent(upper, Y, grid, t_grid) == pytest.approx(3, abs=0.05)
    one = LaurentPoly2.constant(1)
    assert growth_exponent(upper, one, grid, t_grid) == pytest.approx(0, abs=1e-9)


def test_growth_exponent_zero(upper):
    """Test that the zero polynomial is refused."""
    with pytest.raises(ZeroPolynomialError):
        growth_exponent(upper, LaurentPoly2(), [2.0, 4.0], [Fraction(1, 2)])


@pytest.mark.slow
def test_corroborate(lower):
    """Test agreement with the exact semidegree."""
    result = corroborate(lower, Y ** 2 - X ** 6, seed=7)
    assert result["agrees"]
    assert result["expected"] == 1
    assert result["attempts"] == 1


@pytest.mark.slow
def test_oracle_component(upper):
    """Test the configured oracle and its validation."""
    oracle = GrowthOracle({"seed": 3, "x_points": 5})
    assert oracle.initialize()
    assert len(oracle.grid()) == 5
    assert oracle.estimate(upper, X) == pytest.approx(1, abs=0.05)
    assert oracle.corroborate(upper, Y)["agrees"]
    assert not GrowthOracle({"x_min_log2": 5, "x_max_log2": 3}).initialize()
    assert not GrowthOracle({"tolerance": 0}).initialize()
    assert not GrowthOracle({"seed": "a"}).initialize()
