"""Tests for the graded lift one dimension up."""
import random
import pytest
from fractions import Fraction
from tentaclealgebra.errors import InputError
from tentaclealgebra.exact.multipoly import MultiPoly
from tentaclealgebra.lift.transport import (
    GradedElement,
    coefficient_bound,
    lift_element,
    lift_membership,
    lifted_set_description,
    sample_lifted_values,
    split_lifted,
)
from tentaclealgebra.semidegree.engine import StandardTentacleSpec, TentacleSet


XY = MultiPoly(2, {(1, 1): 1})


@pytest.fixture
def strips():
    return TentacleSet([StandardTentacleSpec([0, 1]), StandardTentacleSpec([1, 0])])


def test_lift_element():
    """Test that p in degree d becomes p * t^d."""
    lifted = lift_element(GradedElement(XY, 1))
    assert lifted == MultiPoly(3, {(1, 1, 1): 1})
    assert split_lifted(lifted) == {1: XY}


def test_graded_element_level():
    """Test that levels are non-negative integers."""
    with pytest.raises(InputError):
        GradedElement(XY, -1)
    with pytest.raises(InputError):
        GradedElement(XY, True)
    assert GradedElement(XY, 2) == GradedElement(XY, 2)


def test_lifted_set_description():
    """Test the two constraints added to S."""
    assert lifted_set_description(["x >= 0"], 2) == [
        "x >= 0",
        "x^2 + y^2 >= 1",
        "(x^2 + y^2)*t^2 <= 1",
    ]
    with pytest.raises(InputError):
        lifted_set_description([], 0)


def test_coefficient_bound():
    """Test coefficient bounds from values at 1, 1/2, ..."""
    assert coefficient_bound(0, 5) == [5]
    assert coefficient_bound(1, 1) == [3, 4]
    assert coefficient_bound(1, "1/2") == [Fraction(3, 2), 2]
    with pytest.raises(InputError):
        coefficient_bound(-1, 1)
    with pytest.raises(InputError):
        coefficient_bound(1, 0)


def test_lift_membership(strips):
    """Test the graded pieces of lifted polynomials on the strips."""
    q = MultiPoly(3, {(1, 1, 1): 1, (0, 0, 0): 3})
    assert lift_membership(q, strips) == {0: True, 1: True}
    assert lift_membership(MultiPoly(3, {(2, 0, 1): 1}), strips) == {1: False}


def test_lift_membership_dimension(strips):
    """Test that lifted inputs carry one extra variable."""
    with pytest.raises(InputError):
        lift_membership(XY, strips)


def test_sample_lifted_values():
    """Test that sampled lifts stay bounded and skip points inside the unit ball."""
    element = GradedElement(XY, 1)
    points = [(4, "1/4"), ("1/2", 0), (3, 0)]
    values = sample_lifted_values(element, points, random.Random(3))
    assert len(values) == 2
    assert all(v <= 1 for v in values)
