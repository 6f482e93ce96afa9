"""Monomial bases of B_d and Hilbert bases of the semigroup M for standard tentacles.

For directions ``z^(1), ..., z^(k)`` in ``Z^n`` with ``phi_i = max(0, z^(i))``,
``M = {(alpha, d) in Z_{>=0}^(n+1) : z^(i) . alpha <= d * phi_i for all i}``.
A monomial ``x^alpha`` lies in ``B_d`` exactly when ``(alpha, d)`` lies in M,
and the monomials ``x^alpha t^d`` of a Hilbert basis of M generate B(S).
"""
import itertools
import logging
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.component import Component, positive_int_errors
from ..errors import BoundTooSmallError, InputError
from ..exact.linalg import nullspace
from ..exact.multipoly import MultiPoly
from ..keyforms.lab import Classification
from ..semidegree.engine import phi_z

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]

DEFAULT_SEARCH_BOUND = 8
DEFAULT_DEGREE_CAP = 8


class ConeSemigroup:
    """The semigroup M of lattice points ``(alpha, d)`` allowed by the directions.

    Args:
        directions: Integer direction vectors of the standard tentacles
        n: Ambient dimension; required when ``directions`` is empty
    """

    def __init__(self, directions: Sequence[Sequence[int]], n: Optional[int] = None):
        dims = {len(z) for z in directions}
        if n is not None:
            dims.add(n)
        if len(dims) != 1:
            raise InputError(f"directions do not share one ambient dimension: {sorted(dims)}")
        self.n = dims.pop()
        if self.n < 1:
            raise InputError("the ambient dimension must be positive")
        self.directions: List[Tuple[int, ...]] = [tuple(int(v) for v in z) for z in directions]
        # each constraint reads z . alpha - phi * d <= 0
        self.constraints: List[Tuple[Tuple[int, ...], int]] = [
            (z, phi_z(z)) for z in self.directions
        ]

    @property
    def dim(self) -> int:
        """Dimension n + 1 of the lattice holding M."""
        return self.n + 1

    def contains(self, point: Sequence[int]) -> bool:
        if len(point) != self.dim or any(v < 0 for v in point):
            return False
        alpha, d = point[:-1], point[-1]
        return all(
            sum(zi * ai for zi, ai in zip(z, alpha)) <= d * phi for z, phi in self.constraints
        )

    def inequalities(self) -> List[List[int]]:
        """Normals ``a`` of the cone ``{v : a . v >= 0}`` in R^(n+1)."""
        rows = []
        for j in range(self.dim):
            row = [0] * self.dim
            row[j] = 1
            rows.append(row)
        for z, phi in self.constraints:
            rows.append([-zi for zi in z] + [phi])
        return rows

    def extreme_rays(self) -> List[Point]:
        """Primitive lattice points on the extreme rays of the real cone.

        A ray is extreme when the constraints tight on it have rank n; every
        rank-n subset of the normals is tried and its one-dimensional kernel
        kept when it satisfies all inequalities.
        """
        normals = self.inequalities()
        rays = set()
        for subset in itertools.combinations(normals, self.n):
            kernel = nullspace([[Fraction(v) for v in row] for row in subset], self.dim)
            if len(kernel) != 1:
                continue
            ray = _primitive(kernel[0])
            for candidate in (ray, tuple(-v for v in ray)):
                if all(sum(a * v for a, v in zip(row, candidate)) >= 0 for row in normals):
                    rays.add(candidate)
        return sorted(rays, key=lambda p: (sum(p), tuple(-v for v in p)))

    def __repr__(self) -> str:
        return f"ConeSemigroup(n={self.n}, directions={[list(z) for z in self.directions]})"


def _primitive(vector: Sequence[Fraction]) -> Point:
    denominator = 1
    for v in vector:
        denominator = denominator * v.denominator // gcd(denominator, v.denominator)
    ints = [int(v * denominator) for v in vector]
    common = 0
    for v in ints:
        common = gcd(common, v)
    return tuple(v // common for v in ints)


class HilbertBasis:
    """Irreducible elements of M found within a coordinate bound."""

    def __init__(self, generators: Sequence[Point], search_bound: int):
        self.generators: List[Point] = list(generators)
        self.search_bound = search_bound

    def degree_zero(self) -> List[Point]:
        """Generators with d = 0 and alpha != 0."""
        return [g for g in self.generators if g[-1] == 0 and any(g[:-1])]

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self) -> str:
        return f"HilbertBasis({[list(g) for g in self.generators]})"


def bd_monomial_basis(
    directions: Sequence[Sequence[int]], d: int, degree_cap: int, n: Optional[int] = None
) -> List[Point]:
    """Exponents ``alpha`` with ``|alpha| <= degree_cap`` and ``x^alpha`` in B_d.

    Returns:
        Exponent tuples ordered by total degree, then with x1 first
    """
    if d < 0:
        raise InputError(f"d must be non-negative, got {d}")
    if degree_cap < d:
        raise InputError(f"degree_cap {degree_cap} is below d = {d}")
    cs = ConeSemigroup(directions, n)
    basis = [
        alpha
        for alpha in itertools.product(range(degree_cap + 1), repeat=cs.n)
        if sum(alpha) <= degree_cap and cs.contains(alpha + (d,))
    ]
    return sorted(basis, key=lambda a: (sum(a), tuple(-v for v in a)))


def decompose(point: Sequence[int], generators: Sequence[Point], cs: ConeSemigroup) -> List[Point]:
    """Write an M-point as a sum of generators, subtracting greedily.

    Raises:
        InputError: If no decomposition exists
    """
    remainder = tuple(point)
    parts: List[Point] = []
    while any(remainder):
        for g in generators:
            rest = tuple(r - v for r, v in zip(remainder, g))
            if cs.contains(rest):
                parts.append(g)
                remainder = rest
                break
        else:
            raise InputError(f"{list(point)} does not decompose over the generators")
    return parts


def hilbert_basis(cs: ConeSemigroup, search_bound: int = DEFAULT_SEARCH_BOUND) -> HilbertBasis:
    """Irreducible elements of M with every coordinate at most ``search_bound``.

    Points of the box are visited by increasing coordinate sum; a point is
    reducible when subtracting an earlier generator stays inside M.

    Raises:
        BoundTooSmallError: If an extreme ray's primitive point lies outside the box
    """
    if search_bound < 1:
        raise InputError(f"search_bound must be at least 1, got {search_bound}")
    points = [
        p
        for p in itertools.product(range(search_bound + 1), repeat=cs.dim)
        if any(p) and cs.contains(p)
    ]
    points.sort(key=lambda p: (sum(p), tuple(-v for v in p)))
    logger.debug("%d points of M within bound %d", len(points), search_bound)
    generators: List[Point] = []
    for p in points:
        reducible = any(
            all(a >= b for a, b in zip(p, g)) and cs.contains(tuple(a - b for a, b in zip(p, g)))
            for g in generators
        )
        if not reducible:
            generators.append(p)
    for p in points:
        decompose(p, generators, cs)
    found = set(generators)
    for ray in cs.extreme_rays():
        if max(ray) > search_bound or ray not in found:
            raise BoundTooSmallError(
                f"bound too small: extreme ray {list(ray)} needs bound {max(ray)}"
            )
    logger.debug("Hilbert basis of %s has %d elements", cs, len(generators))
    return HilbertBasis(generators, search_bound)


def generator_names(n: int) -> Tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n)) + ("t",)


def algebra_generators(
    directions: Sequence[Sequence[int]],
    search_bound: int = DEFAULT_SEARCH_BOUND,
    n: Optional[int] = None,
) -> List[str]:
    """Monomials ``x^alpha t^d`` generating B(S) inside R[x, t]."""
    cs = ConeSemigroup(directions, n)
    names = generator_names(cs.n)
    return [MultiPoly.monomial(g).render(names) for g in hilbert_basis(cs, search_bound)]


def classify_standard(
    directions: Sequence[Sequence[int]], search_bound: int = DEFAULT_SEARCH_BOUND
) -> Classification:
    """Classify B(S) for a finite union of standard tentacles.

    B(S) is always finitely generated. B_0(S) is the constants exactly when no
    generator has d = 0 and alpha != 0, and then every B_d is finite dimensional.
    """
    cs = ConeSemigroup(directions)
    basis = hilbert_basis(cs, search_bound)
    trivial = not basis.degree_zero()
    distinct = set(cs.directions)
    single = len(distinct) == 1 and phi_z(next(iter(distinct))) > 0
    return Classification(
        b0_trivial=trivial,
        b_fg=True,
        bd_all_finite=trivial,
        some_bd_infinite=not trivial,
        last_form_polynomial=True,
        omega_last=None,
        moment_status=None,
        semidegree=single and trivial,
        method="hilbert_basis",
    )


class ConeBasisSolver(Component):
    """Engine for B_d monomial bases and Hilbert bases."""

    defaults = {"search_bound": DEFAULT_SEARCH_BOUND, "degree_cap": DEFAULT_DEGREE_CAP}

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("cones", config)

    def config_errors(self) -> List[str]:
        return positive_int_errors(self.config, "search_bound", "degree_cap")

    def basis(
        self,
        directions: Sequence[Sequence[int]],
        d: int,
        degree_cap: Optional[int] = None,
        n: Optional[int] = None,
    ) -> List[Point]:
        return bd_monomial_basis(directions, d, self.setting("degree_cap", degree_cap), n)

    def hilbert(
        self,
        directions: Sequence[Sequence[int]],
        search_bound: Optional[int] = None,
        n: Optional[int] = None,
    ) -> HilbertBasis:
        bound = self.setting("search_bound", search_bound)
        return hilbert_basis(ConeSemigroup(directions, n), bound)
