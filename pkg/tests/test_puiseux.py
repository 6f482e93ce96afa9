"""Tests for Puiseux expansions at infinity and generic series."""
import pytest
from fractions import Fraction
from tentaclealgebra.errors import (
    DegenerateTentacleError,
    InputError,
    NoBranchError,
    NonRationalBranchError,
)
from tentaclealgebra.exact.rational import XiPoly
from tentaclealgebra.exact.series import LaurentPoly2, PuiseuxSeries, SeriesPolyY
from tentaclealgebra.puiseux.expansion import (
    PuiseuxExpander,
    SemidegreeSpec,
    expand_at_infinity,
    first_divergence,
    generic_series_from_boundaries,
    newton_edges,
    top_branch,
)


X = LaurentPoly2.x()
Y = LaurentPoly2.y()


def series(*terms):
    return PuiseuxSeries([(Fraction(e), XiPoly.constant(c)) for c, e in terms])


def test_spec_rejects_high_omega():
    """Test that omega must lie below every exponent of phi."""
    with pytest.raises(InputError):
        SemidegreeSpec(series((1, 2)), 2)
    spec = SemidegreeSpec(series((1, "5/2")), "-3/2")
    assert spec.ram == 2
    assert spec.generic_series().coefficient("-3/2") == XiPoly.xi()


def test_total_degree_spec():
    """Test the total-degree flag."""
    spec = SemidegreeSpec.total_degree()
    assert spec.is_total_degree
    assert spec == SemidegreeSpec.total_degree()
    with pytest.raises(InputError):
        spec.generic_series()


def test_newton_edges():
    """Test the Newton polygon of y^2 - x^5."""
    g = SeriesPolyY.from_laurent(Y ** 2 - X ** 5)
    assert newton_edges(g) == [(Fraction(5, 2), [0, 2])]


def test_expand_exact_branch():
    """Test a branch that terminates."""
    branches = expand_at_infinity(Y - X ** 2)
    assert len(branches) == 1
    assert branches[0].series == series((1, 2))
    assert branches[0].exact
    assert branches[0].real


def test_expand_two_branches_sorted():
    """Test that real branches come out from the top down."""
    branches = expand_at_infinity(Y ** 2 - X ** 5)
    assert [b.series for b in branches] == [series((1, "5/2")), series((-1, "5/2"))]
    assert all(b.exact for b in branches)


def test_expand_truncated_branch():
    """Test an infinite expansion cut at the term limit."""
    branches = expand_at_infinity(Y ** 2 - X ** 5 - X, term_limit=3)
    top = branches[0]
    assert not top.exact
    assert len(top.series) == 3
    assert top.series.exponents()[:2] == [Fraction(5, 2), Fraction(-3, 2)]
    assert top.series.coefficient("-3/2") == XiPoly.constant(Fraction(1, 2))


def test_expand_complex_family():
    """Test that conjugate complex branches are reported once."""
    branches = expand_at_infinity(Y ** 2 + X ** 2)
    assert len(branches) == 1
    family = branches[0]
    assert not family.real
    assert family.conjugates == 2
    assert family.complex_exponent == 1
    assert family.minimal_polynomial == (1, 0, 1)


def test_expand_irrational_branch():
    """Test that irrational real coefficients are refused."""
    with pytest.raises(NonRationalBranchError):
        expand_at_infinity(Y ** 2 - (X ** 2).scale(2))


def test_expand_needs_y():
    """Test that a curve without y has no branch."""
    with pytest.raises(NoBranchError):
        expand_at_infinity(X + LaurentPoly2.constant(1))


def test_first_divergence_and_top_branch():
    """Test comparing an exact branch with a truncated one."""
    exact = expand_at_infinity(Y ** 2 - X ** 5)[0]
    shifted = expand_at_infinity(Y ** 2 - X ** 5 - X)[0]
    assert first_divergence(shifted, exact) == (Fraction(-3, 2), 1)
    assert top_branch([exact, shifted]) is shifted


def test_generic_series_from_boundaries():
    """Test the tentacle between y^2 = x^5 and y^2 = x^5 + x."""
    spec = generic_series_from_boundaries(Y ** 2 - X ** 5, Y ** 2 - X ** 5 - X)
    assert spec == SemidegreeSpec(series((1, "5/2")), "-3/2")


def test_generic_series_of_counterexample_boundary():
    """Test boundaries whose branches are -x^3 + x^-2 + c x^-3."""
    base = X ** 3 * Y + X ** 6 - X
    f1 = base - LaurentPoly2.constant(1)
    f2 = base - LaurentPoly2.constant(2)
    spec = generic_series_from_boundaries(f1, f2)
    assert spec == SemidegreeSpec(series((-1, 3), (1, -2)), -3)
    assert generic_series_from_boundaries(f2, f1) == spec


def test_generic_series_ignores_boundary_order():
    """Test that swapping the two boundaries gives the same spec."""
    pairs = [
        (Y ** 2 - X ** 5, Y ** 2 - X ** 5 - X),
        (Y - X ** 2, Y),
        (Y ** 2 - X ** 5 - X, Y ** 2 - X ** 5 - X.scale(2)),
    ]
    for f1, f2 in pairs:
        assert generic_series_from_boundaries(f1, f2) == generic_series_from_boundaries(f2, f1)


def test_generic_series_total_degree():
    """Test that branches in different directions give the total degree."""
    spec = generic_series_from_boundaries(Y - X ** 2, Y)
    assert spec.is_total_degree


def test_generic_series_same_branch():
    """Test that identical boundaries are degenerate."""
    with pytest.raises(DegenerateTentacleError):
        generic_series_from_boundaries(Y - X ** 2, Y - X ** 2)


def test_generic_series_same_truncated_branch():
    """Test that a non-terminating boundary repeated is degenerate before any retry."""
    f = Y ** 2 - X ** 5 - X.scale(2) - LaurentPoly2.constant(1)
    with pytest.raises(DegenerateTentacleError):
        generic_series_from_boundaries(f, f, term_limit=4, max_term_limit=4)
    with pytest.raises(DegenerateTentacleError):
        generic_series_from_boundaries(f, f.scale(-3))
    with pytest.raises(DegenerateTentacleError):
        generic_series_from_boundaries(f, f, branches=(1, 1))
    spec = generic_series_from_boundaries(f, f, branches=(0, 1))
    assert spec.omega == Fraction(5, 2)
    assert spec.phi.is_zero()


def test_branch_index_out_of_range():
    """Test explicit branch selection."""
    with pytest.raises(InputError):
        generic_series_from_boundaries(Y - X ** 2, Y - X, branches=(3, None))


def test_expander_component():
    """Test the configured expander."""
    expander = PuiseuxExpander({"term_limit": 4})
    assert expander.initialize()
    assert len(expander.expand(Y ** 2 - X ** 5 - X)[0].series) == 4
    bad = PuiseuxExpander({"term_limit": 8, "max_term_limit": 4})
    assert not bad.initialize()
