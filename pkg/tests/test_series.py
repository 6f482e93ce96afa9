"""Tests for exact rationals, series and Laurent polynomials."""
import pytest
from fractions import Fraction
from tentaclealgebra.errors import InputError, NoLeadingTermError, UnsupportedInputError
from tentaclealgebra.exact.linalg import canonical_basis, inverse, nullspace
from tentaclealgebra.exact.multipoly import MultiPoly, default_names
from tentaclealgebra.exact.rational import XiPoly, as_rat, format_rat, lcm_of_denominators
from tentaclealgebra.exact.series import (
    LaurentPoly2,
    PuiseuxSeries,
    series_combine,
    shift_y,
    substitute,
)


X = LaurentPoly2.x()
Y = LaurentPoly2.y()


def series(*terms):
    return PuiseuxSeries([(Fraction(e), XiPoly.constant(c)) for c, e in terms])


def test_as_rat_refuses_floats():
    """Test that inexact inputs never become rationals."""
    assert as_rat("3/4") == Fraction(3, 4)
    assert as_rat(-2) == Fraction(-2)
    with pytest.raises(TypeError):
        as_rat(0.5)
    with pytest.raises(TypeError):
        as_rat(True)


def test_format_rat():
    """Test canonical rational rendering."""
    assert format_rat(Fraction(-3, 4)) == "-3/4"
    assert format_rat(Fraction(6, 3)) == "2"
    assert lcm_of_denominators([Fraction(1, 2), Fraction(2, 3), Fraction(5)]) == 6


def test_xipoly_arithmetic():
    """Test polynomials in the generic parameter."""
    xi = XiPoly.xi()
    p = (xi + XiPoly.constant(1)) * (xi - XiPoly.constant(1))
    assert p.coeffs == (Fraction(-1), Fraction(0), Fraction(1))
    assert p.evaluate(3) == 8
    assert p.degree() == 2
    assert XiPoly((0, 0)).is_zero()


def test_series_ordering_and_ram():
    """Test that terms are sorted by descending exponent."""
    s = series((1, -1), (1, "3/2"))
    assert s.exponents() == [Fraction(3, 2), Fraction(-1)]
    assert s.ram == 2
    assert s.leading_term() == (Fraction(3, 2), XiPoly.constant(1))
    assert str(s) == "x^3/2 + x^-1"


def test_series_power():
    """Test products of series."""
    s = series((1, 1), (1, -1))
    assert s ** 2 == series((1, 2), (2, 0), (1, -2))
    assert s ** 0 == PuiseuxSeries.constant(1)


def test_series_cancellation():
    """Test that cancelling terms disappear."""
    s = series((1, 3), (2, 0))
    assert (s - s).is_zero()
    with pytest.raises(NoLeadingTermError):
        (s - s).leading_term()


def test_series_combine():
    """Test exact sums and products of series."""
    s = series((1, 3), (1, -2))
    assert series_combine(s, s, "add") == series((2, 3), (2, -2))
    root = series((1, "5/2"), (1, "-3/2"))
    assert series_combine(root, root, "mul") == series((1, 5), (2, 1), (1, -3))
    assert series_combine(PuiseuxSeries.zero(), root, "mul").is_zero()
    with pytest.raises(InputError):
        series_combine(s, s, "div")


def test_series_combine_ram():
    """Test that ramification of a combination is the lcm of the inputs."""
    half, third = series((1, "1/2")), series((1, "1/3"))
    assert series_combine(half, third, "add").ram == 6
    assert series_combine(half, third, "mul").exponents() == [Fraction(5, 6)]
    assert series_combine(half, half, "mul").ram == 1


def test_substitute_generic_series():
    """Test y^2 - x^6 along x^3 + x^-2 + xi x^-3."""
    generic = series((1, 3), (1, -2)) + PuiseuxSeries.generic_monomial(-3)
    result = substitute(Y ** 2 - X ** 6, generic)
    xi = XiPoly.xi()
    expected = PuiseuxSeries(
        [
            (Fraction(1), XiPoly.constant(2)),
            (Fraction(0), xi.scale(2)),
            (Fraction(-4), XiPoly.constant(1)),
            (Fraction(-5), xi.scale(2)),
            (Fraction(-6), xi * xi),
        ]
    )
    assert result == expected
    assert result.leading_term() == (Fraction(1), XiPoly.constant(2))


def test_substitute_preserves_products():
    """Test substitute(f g, s) = substitute(f, s) * substitute(g, s)."""
    generic = series((-1, 3), (1, -2)) + PuiseuxSeries.generic_monomial(-3)
    f = Y ** 2 - X ** 6
    g = X * Y + LaurentPoly2.monomial(3, -1, 0)
    assert substitute(f * g, generic) == series_combine(
        substitute(f, generic), substitute(g, generic), "mul"
    )
    assert substitute(X ** 2, generic) == series((1, 2))


def test_series_at_xi_and_above():
    """Test specialization of the generic coefficient and truncation."""
    generic = series((1, 3)) + PuiseuxSeries.generic_monomial(-3)
    assert generic.at_xi(2) == series((1, 3), (2, -3))
    assert generic.above(0) == series((1, 3))
    assert not generic.is_xi_free()


def test_substitute_along_curve():
    """Test f(x, phi(x)) for y^2 - x^6 along -x^3 + x^-2."""
    f = Y ** 2 - X ** 6
    result = substitute(f, series((-1, 3), (1, -2)))
    assert result == series((-2, 1), (1, -4))


def test_shift_y_recentres():
    """Test partial substitution y -> y + x^3 + x^-2."""
    f = Y ** 2 - X ** 6
    shifted = shift_y(f, series((1, 3), (1, -2)))
    expected = LaurentPoly2(
        {(0, 2): 1, (3, 1): 2, (-2, 1): 2, (-4, 0): 1, (1, 0): 2}
    )
    assert shifted == expected


def test_shift_y_minus_branch():
    """Test the recentring along the other branch."""
    f = Y ** 2 - X ** 6
    shifted = shift_y(f, series((-1, 3), (1, -2)))
    assert shifted.coefficient(3, 1) == -2
    assert shifted.coefficient(1, 0) == -2
    assert shifted.coefficient(-4, 0) == 1


def test_shift_y_rejects_fractional_series():
    """Test that a fractional shift cannot return a Laurent polynomial."""
    with pytest.raises(UnsupportedInputError):
        shift_y(Y, series((1, "1/2")))


def test_laurent_basics():
    """Test Laurent polynomial queries and printing."""
    f = Y ** 2 - X ** 5 - LaurentPoly2.monomial(1, -1, 1)
    assert f.deg_y() == 2
    assert not f.is_polynomial()
    assert f.is_monic_in_y()
    assert str(f) == "y^2 - x^-1*y - x^5"
    assert f.evaluate(1, 2) == 4 - 2 - 1


def test_laurent_negative_y_rejected():
    """Test that y may not appear with a negative exponent."""
    with pytest.raises(InputError):
        LaurentPoly2({(0, -1): 1})


def test_divmod_y():
    """Test division by a monic polynomial in y."""
    f = Y ** 3 + X
    q, r = f.divmod_y(Y ** 2 - X ** 5)
    assert q == Y
    assert r == X ** 5 * Y + X


def test_multipoly_roundtrip_to_plane():
    """Test conversion between the n-variable and the planar representation."""
    p = MultiPoly(2, {(2, 0): 1, (0, 1): -3})
    assert MultiPoly.from_laurent2(p.to_laurent2()) == p
    assert p.total_degree() == 2
    assert p.weighted_degree([1, 2]) == 2


def test_multipoly_lift_and_split():
    """Test adding a variable and splitting by its powers."""
    p = MultiPoly(2, {(1, 1): 2})
    lifted = p.extend(1) * MultiPoly.variable(3, 2) ** 2
    pieces = lifted.split_last()
    assert list(pieces) == [2]
    assert pieces[2] == p


def test_multipoly_render():
    """Test rendering with explicit names."""
    assert default_names(2) == ("x", "y")
    assert default_names(3) == ("x1", "x2", "x3")
    p = MultiPoly.monomial((1, 1, 1))
    assert p.render(("x1", "x2", "t")) == "x1*x2*t"


def test_nullspace_and_canonical_basis():
    """Test exact kernels over Q."""
    rows = [[Fraction(1), Fraction(2), Fraction(3)]]
    kernel = nullspace(rows, 3)
    assert len(kernel) == 2
    for vector in kernel:
        assert sum(a * b for a, b in zip(rows[0], vector)) == 0
    basis = canonical_basis(list(reversed(kernel)), 3)
    assert basis == canonical_basis(kernel, 3)


def test_inverse():
    """Test an exact matrix inverse."""
    rows = [[Fraction(2), Fraction(2)], [Fraction(2), Fraction(1)]]
    assert inverse(rows) == [
        [Fraction(-1, 2), Fraction(1)],
        [Fraction(1), Fraction(-1)],
    ]
