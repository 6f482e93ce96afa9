"""Randomized checks of the algebraic identities behind the engines."""
import itertools
import math
import random
import pytest
from fractions import Fraction
from tentaclealgebra.cones.basis import ConeSemigroup, bd_monomial_basis
from tentaclealgebra.exact.linalg import canonical_basis, nullspace
from tentaclealgebra.exact.multipoly import MultiPoly
from tentaclealgebra.exact.rational import XiPoly
from tentaclealgebra.exact.series import LaurentPoly2, PuiseuxSeries, series_combine, substitute
from tentaclealgebra.keyforms.lab import keyforms_of_spec
from tentaclealgebra.keyforms.sequence import boundary_curves, build_keyforms
from tentaclealgebra.lift.transport import (
    GradedElement,
    coefficient_bound,
    lift_element,
    lift_membership,
)
from tentaclealgebra.oracle.sampling import corroborate
from tentaclealgebra.puiseux.expansion import SemidegreeSpec, generic_series_from_boundaries
from tentaclealgebra.semidegree.engine import (
    StandardTentacleSpec,
    TentacleSet,
    delta_bar,
    delta_S,
    delta_star,
)
from tentaclealgebra.semidegree.maclane import maclane_value
from tentaclealgebra.witness.search import dimension_profile


CASES = 100
SEEDS = [0, 1, 2, 3, 4]

EXEX_PLANS = [
    ([("5/2", 1)], 1),
    ([("5/2", 1)], 0),
    ([("5/2", 1), ("3/2", 1)], 1),
    ([("5/2", 1), ("3/2", 1)], 0),
]

FIRST_STEPS = [("5/2", 1), ("5/2", 4), ("3/2", 1), ("7/3", 1), (2, 1), (2, -3)]
CONSTANTS = [-2, -1, 1, 2, "1/2"]


def series(*terms):
    return PuiseuxSeries([(Fraction(e), XiPoly.constant(c)) for c, e in terms])


def random_poly(rng, max_degree=3, terms=4):
    poly = LaurentPoly2()
    while poly.is_zero():
        poly = LaurentPoly2(
            {
                (rng.randint(0, max_degree), rng.randint(0, max_degree)): rng.randint(-3, 3)
                for _ in range(terms)
            }
        )
    return poly


def random_bounded_degree(rng, degree=8, terms=5):
    """Polynomial of total degree at most ``degree``."""
    poly = LaurentPoly2()
    while poly.is_zero():
        monomials = {}
        for _ in range(rng.randint(1, terms)):
            b = rng.randint(0, degree)
            monomials[(rng.randint(0, degree - b), b)] = rng.randint(-3, 3)
        poly = LaurentPoly2(monomials)
    return poly


def random_multipoly(rng, n, max_degree=3, terms=3):
    poly = MultiPoly(n)
    while poly.is_zero():
        poly = MultiPoly(
            n,
            {
                tuple(rng.randint(0, max_degree) for _ in range(n)): rng.randint(-3, 3)
                for _ in range(terms)
            },
        )
    return poly


def random_plan(rng):
    """Plan with rational branches: every step after the first stays in the value group."""
    first = rng.choice(FIRST_STEPS)
    omega = Fraction(first[0])
    N = omega.denominator
    bound = omega * N
    steps = [first]
    for _ in range(rng.randint(0, 2)):
        omega = bound - Fraction(rng.randint(1, 2 * N), N)
        steps.append((omega, rng.choice(CONSTANTS)))
        bound = omega
    return steps, bound - Fraction(rng.randint(1, 2 * N), N)


def planned_spec(steps, omega_last):
    f1, f2, _ = boundary_curves(build_keyforms(steps), omega_last, 0, 1)
    return generic_series_from_boundaries(f1, f2)


@pytest.fixture
def cusp_spec():
    return SemidegreeSpec(series((1, "5/2")), "-3/2")


@pytest.fixture
def specs(cusp_spec):
    return [
        cusp_spec,
        SemidegreeSpec(series((-1, 3), (1, -2)), -3),
        SemidegreeSpec(series((1, 3), (1, -2)), -3),
        SemidegreeSpec(series((1, "7/3")), "-11/3"),
        SemidegreeSpec(None, "1/2"),
    ]


@pytest.fixture
def tentacle_sets(specs):
    return [
        TentacleSet(specs[1:3]),
        TentacleSet([specs[0]]),
        TentacleSet([StandardTentacleSpec([0, 1]), StandardTentacleSpec([1, 0])]),
        TentacleSet([specs[3], StandardTentacleSpec([2, -1])]),
        TentacleSet([SemidegreeSpec.total_degree(), StandardTentacleSpec([1, 1])]),
    ]


def test_semidegree_is_additive(specs):
    """Test delta_star(f g) = delta_star(f) + delta_star(g)."""
    rng = random.Random(11)
    for _ in range(CASES):
        spec = rng.choice(specs)
        f, g = random_poly(rng), random_poly(rng)
        assert delta_star(spec, f * g) == delta_star(spec, f) + delta_star(spec, g)


def test_semidegree_of_sum(specs):
    """Test the ultrametric inequality."""
    rng = random.Random(12)
    checked = 0
    while checked < CASES:
        spec = rng.choice(specs)
        f, g = random_poly(rng), random_poly(rng)
        if (f + g).is_zero():
            continue
        bound = max(delta_star(spec, f), delta_star(spec, g))
        assert delta_star(spec, f + g) <= bound
        checked += 1


def test_substitute_preserves_products(specs):
    """Test that substitution along a generic series is multiplicative."""
    rng = random.Random(13)
    for _ in range(CASES):
        s = rng.choice(specs).generic_series()
        f, g = random_poly(rng, terms=3), random_poly(rng, terms=3)
        product = series_combine(substitute(f, s), substitute(g, s), "mul")
        assert substitute(f * g, s) == product


def test_delta_bar_is_homogeneous(tentacle_sets):
    """Test delta_bar(f^k) = k * delta_bar(f)."""
    rng = random.Random(14)
    for _ in range(CASES):
        S = rng.choice(tentacle_sets)
        f = random_multipoly(rng, 2, max_degree=2)
        k = rng.randint(2, 3)
        assert delta_bar(S, f ** k) == k * delta_bar(S, f)


def test_delta_S_is_ceiling_of_delta_bar(tentacle_sets):
    """Test delta_S = ceil(delta_bar) and the common denominator of the values."""
    rng = random.Random(15)
    for _ in range(CASES):
        S = rng.choice(tentacle_sets)
        f = random_multipoly(rng, 2)
        value = delta_bar(S, f)
        assert delta_S(S, f) == math.ceil(value)
        assert (value * S.integrality_index()).denominator == 1


def test_graded_product_law(tentacle_sets):
    """Test that B_d * B_e lies in B_(d + e)."""
    rng = random.Random(16)
    for _ in range(CASES):
        S = rng.choice(tentacle_sets)
        f, g = random_multipoly(rng, 2), random_multipoly(rng, 2)
        assert delta_S(S, f * g) <= delta_S(S, f) + delta_S(S, g)


def test_monomial_bases_multiply():
    """Test the graded product law on monomial bases of standard tentacles."""
    rng = random.Random(17)
    for _ in range(CASES):
        directions = [[rng.randint(-1, 2) for _ in range(2)] for _ in range(rng.randint(1, 3))]
        d, e = rng.randint(0, 2), rng.randint(0, 2)
        cs = ConeSemigroup(directions, 2)
        for a in bd_monomial_basis(directions, d, 3, 2):
            for b in bd_monomial_basis(directions, e, 3, 2):
                assert cs.contains(tuple(x + y for x, y in zip(a, b)) + (d + e,))


def test_cone_membership_matches_delta_S():
    """Test that the monomial basis of B_d is exactly the monomials with delta_S <= d."""
    rng = random.Random(18)
    for _ in range(CASES):
        n = rng.randint(2, 3)
        directions = [[rng.randint(-1, 2) for _ in range(n)] for _ in range(rng.randint(1, 3))]
        S = TentacleSet([StandardTentacleSpec(z) for z in directions])
        d, cap = rng.randint(0, 2), 3
        listed = set(bd_monomial_basis(directions, d, cap, n))
        for alpha in itertools.product(range(cap + 1), repeat=n):
            if sum(alpha) > cap:
                continue
            member = delta_S(S, MultiPoly.monomial(alpha)) <= d
            assert (alpha in listed) is member


def test_lift_matches_levels():
    """Test that p t^d lifts to a bounded polynomial exactly when delta_S(p) <= d."""
    rng = random.Random(19)
    for _ in range(CASES):
        n = rng.randint(1, 3)
        directions = [[rng.randint(-1, 2) for _ in range(n)] for _ in range(rng.randint(1, 2))]
        S = TentacleSet([StandardTentacleSpec(z) for z in directions])
        p = random_multipoly(rng, n, max_degree=2, terms=2)
        level = delta_S(S, p)
        assert lift_membership(lift_element(GradedElement(p, level)), S) == {level: True}
        if level > 0:
            lower = lift_element(GradedElement(p, level - 1))
            assert lift_membership(lower, S) == {level - 1: False}


def test_coefficient_bound_is_sound():
    """Test that |a_j| stays below the bound for polynomials bounded on [0, 1]."""
    rng = random.Random(20)
    points = {Fraction(i, 40) for i in range(41)} | {Fraction(1, k) for k in range(1, 6)}
    for _ in range(CASES):
        d = rng.randint(0, 4)
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(d + 1)]
        if not any(coeffs):
            coeffs[0] = Fraction(1)
        C = max(abs(sum(c * x ** j for j, c in enumerate(coeffs))) for x in points)
        if C == 0:
            continue
        bounds = coefficient_bound(d, C)
        assert all(abs(c) <= b for c, b in zip(coeffs, bounds))


def test_keyform_value_equals_semidegree():
    """Test that the key-form value reproduces delta_star on planned tentacles."""
    rng = random.Random(21)
    plans = list(EXEX_PLANS) + [random_plan(rng) for _ in range(4)]
    for steps, omega_last in plans:
        spec = planned_spec(steps, omega_last)
        seq = keyforms_of_spec(spec)
        for _ in range(25):
            f = random_bounded_degree(rng)
            assert maclane_value(seq, f) == delta_star(spec, f)


def test_plan_round_trips():
    """Test that boundaries built from a plan give back its key forms and values."""
    rng = random.Random(22)
    for _ in range(24):
        steps, omega_last = random_plan(rng)
        planned = build_keyforms(steps, omega_last=omega_last)
        recovered = keyforms_of_spec(planned_spec(steps, omega_last))
        assert recovered.forms == planned.forms
        assert recovered.values == planned.values


@pytest.mark.slow
def test_sampled_growth_agrees(specs):
    """Test sampled growth against max(0, delta_star) with x up to 2^14."""
    rng = random.Random(23)
    gapped = specs[:3] + [
        SemidegreeSpec(series((1, 3)), 0),
        SemidegreeSpec(series((1, 2), (1, 1)), -1),
    ]
    for index in range(60):
        spec = gapped[index % len(gapped)]
        f = LaurentPoly2()
        while f.is_zero():
            f = LaurentPoly2(
                {
                    (rng.randint(0, 3), rng.randint(0, 3)): rng.choice([-2, -1, 1, 2])
                    for _ in range(rng.randint(1, 3))
                }
            )
        result = corroborate(spec, f, seed=index)
        assert result["agrees"], (spec, f, result)


@pytest.mark.parametrize("seed", SEEDS)
def test_canonical_basis_ignores_order(seed):
    """Test that the echelon basis does not depend on the spanning order."""
    rng = random.Random(seed)
    rows = [[Fraction(rng.randint(-2, 2)) for _ in range(5)] for _ in range(2)]
    kernel = nullspace(rows, 5)
    shuffled = list(kernel)
    rng.shuffle(shuffled)
    assert canonical_basis(shuffled, 5) == canonical_basis(kernel, 5)


@pytest.mark.parametrize("seed", SEEDS)
def test_dimension_profile_nondecreasing(seed, cusp_spec):
    """Test that raising the degree bound never loses solutions."""
    rng = random.Random(seed)
    d = rng.randint(0, 4)
    dims = dimension_profile([cusp_spec], d, [1, 2, 3, 4])
    assert all(a <= b for a, b in zip(dims, dims[1:]))
