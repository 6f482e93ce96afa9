"""Tests for semidegrees and degree-like functions of tentacle sets."""
import pytest
from fractions import Fraction
from tentaclealgebra.errors import InputError, ZeroPolynomialError
from tentaclealgebra.exact.multipoly import MultiPoly
from tentaclealgebra.exact.rational import XiPoly
from tentaclealgebra.exact.series import LaurentPoly2, PuiseuxSeries
from tentaclealgebra.keyforms.sequence import build_keyforms
from tentaclealgebra.puiseux.expansion import SemidegreeSpec
from tentaclealgebra.semidegree.engine import (
    SemidegreeEngine,
    StandardTentacleSpec,
    TentacleSet,
    delta_bar,
    delta_S,
    delta_star,
    phi_z,
    tentacle_value,
    weighted_degree,
)
from tentaclealgebra.semidegree.maclane import expand_in_forms, maclane_value


X = LaurentPoly2.x()
Y = LaurentPoly2.y()


def series(*terms):
    return PuiseuxSeries([(Fraction(e), XiPoly.constant(c)) for c, e in terms])


@pytest.fixture
def counterexample_set():
    """The two tentacles around y = -x^3 + x^-2 and y = x^3 + x^-2."""
    return TentacleSet(
        [
            SemidegreeSpec(series((-1, 3), (1, -2)), -3),
            SemidegreeSpec(series((1, 3), (1, -2)), -3),
        ]
    )


@pytest.fixture
def strips():
    return TentacleSet([StandardTentacleSpec([0, 1]), StandardTentacleSpec([1, 0])])


def test_delta_star_on_counterexample(counterexample_set):
    """Test y^2 - x^6 grows like x on both tentacles."""
    f = Y ** 2 - X ** 6
    for spec in counterexample_set.puiseux_specs():
        assert delta_star(spec, f) == 1
    assert delta_bar(counterexample_set, f) == 1
    assert delta_S(counterexample_set, f) == 1


def test_delta_star_generic_term():
    """Test that cancelling phi exposes the generic term."""
    spec = SemidegreeSpec(series((1, "5/2")), "-3/2")
    assert delta_star(spec, Y) == Fraction(5, 2)
    assert delta_star(spec, Y ** 2 - X ** 5) == 1
    assert delta_star(spec, X ** 5) == 5


def test_delta_star_zero_polynomial():
    """Test that the zero polynomial has no semidegree."""
    spec = SemidegreeSpec(series((1, 1)), 0)
    with pytest.raises(ZeroPolynomialError):
        delta_star(spec, LaurentPoly2())


def test_standard_tentacles(strips):
    """Test weighted degrees along the coordinate strips."""
    x1x2 = MultiPoly(2, {(1, 1): 1})
    assert delta_bar(strips, x1x2) == 1
    assert delta_bar(strips, MultiPoly(2, {(2, 0): 1})) == 2
    assert delta_bar(strips, MultiPoly.constant(2, 5)) == 0


def test_phi_z_and_weighted_degree():
    """Test the normalization of standard directions."""
    assert phi_z([-1, 0]) == 0
    assert phi_z([1, 2]) == 2
    f = MultiPoly(2, {(1, 0): 1, (0, 1): 1})
    assert weighted_degree([1, 2], f) == 2
    assert tentacle_value(StandardTentacleSpec([-1, 0]), f) == 0


def test_fractional_delta_bar_rounds_up():
    """Test that delta_S is the ceiling of delta_bar."""
    S = TentacleSet([StandardTentacleSpec([1, 2])])
    f = MultiPoly(2, {(1, 0): 1})
    assert delta_bar(S, f) == Fraction(1, 2)
    assert delta_S(S, f) == 1


def test_total_degree_tentacle():
    """Test the total-degree spec contributes the total degree."""
    S = TentacleSet([SemidegreeSpec.total_degree()])
    assert delta_bar(S, X ** 2 * Y) == 3


def test_integrality_index():
    """Test the common denominator of delta_bar values."""
    S = TentacleSet([SemidegreeSpec(series((1, "3/2")), "-3/2"), StandardTentacleSpec([2, 3])])
    assert S.integrality_index() == 6


def test_dimension_mismatch():
    """Test that tentacles must share an ambient dimension."""
    with pytest.raises(InputError):
        TentacleSet([StandardTentacleSpec([1, 0, 0]), StandardTentacleSpec([1, 0])])
    S = TentacleSet([StandardTentacleSpec([1, 1, 1])])
    with pytest.raises(InputError):
        delta_bar(S, MultiPoly(2, {(1, 0): 1}))


def test_laurent_input_on_puiseux(counterexample_set, strips):
    """Test that negative powers of x are evaluated on Puiseux tentacles only."""
    f = LaurentPoly2.monomial(1, -1, 1)
    assert delta_bar(counterexample_set, f) == 2
    with pytest.raises(InputError):
        delta_bar(strips, f)
    with pytest.raises(InputError):
        delta_bar(TentacleSet([SemidegreeSpec.total_degree()]), f)


def test_engine_report(counterexample_set):
    """Test the engine's combined report."""
    engine = SemidegreeEngine()
    report = engine.evaluate(counterexample_set, Y)
    assert report == {"delta_star": [3, 3], "delta_bar": 3, "delta_S": 3}


def test_expand_in_forms():
    """Test the key-form expansion of y^2."""
    forms = build_keyforms([("5/2", 1)]).forms
    expansion = dict((digits, c) for c, digits in expand_in_forms(Y ** 2, forms))
    assert expansion == {(0, 0, 1): 1, (5, 0, 0): 1}


def test_maclane_value_matches_delta_star():
    """Test that the key-form value agrees with the semidegree."""
    seq = build_keyforms([("5/2", 1)], omega_last=1)
    spec = SemidegreeSpec(series((1, "5/2")), "-3/2")
    for f in (Y, Y ** 2, Y ** 2 - X ** 5, X ** 5 * Y - Y ** 3, Y ** 4 - X ** 10):
        assert maclane_value(seq, f) == delta_star(spec, f)
