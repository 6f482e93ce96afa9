"""Degree-like functions of tentacles and of finite unions of tentacles."""
import logging
import math
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Union

from ..core.component import Component
from ..errors import InputError, ZeroPolynomialError
from ..exact.multipoly import MultiPoly
from ..exact.rational import lcm
from ..exact.series import LaurentPoly2, substitute
from ..puiseux.expansion import SemidegreeSpec

logger = logging.getLogger(__name__)

Polynomial = Union[LaurentPoly2, MultiPoly]


class StandardTentacleSpec:
    """Direction vector z of a standard z-tentacle.

    Only z matters for degrees; the compact base is assumed to avoid the
    coordinate hyperplanes.
    """

    def __init__(self, z: Sequence[int]):
        if not z:
            raise InputError("a standard tentacle needs a non-empty direction vector")
        for value in z:
            if isinstance(value, bool) or not isinstance(value, int):
                raise InputError(f"direction entries must be integers, got {value!r}")
        self.z = tuple(z)

    @property
    def n(self) -> int:
        return len(self.z)

    @property
    def phi_z(self) -> int:
        return phi_z(self.z)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, StandardTentacleSpec):
            return self.z == other.z
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.z)

    def __repr__(self) -> str:
        return f"StandardTentacleSpec(z={list(self.z)})"


Tentacle = Union[SemidegreeSpec, StandardTentacleSpec]


class TentacleSet:
    """Union of tentacles representing a set S.

    Args:
        tentacles: Puiseux-type specs (plane only) and standard tentacles
        ambient_dim: Dimension n of the ambient space; inferred when omitted
    """

    def __init__(self, tentacles: Sequence[Tentacle], ambient_dim: Optional[int] = None):
        if not tentacles:
            raise InputError("a tentacle set needs at least one tentacle")
        dims = {t.n for t in tentacles if isinstance(t, StandardTentacleSpec)}
        if any(isinstance(t, SemidegreeSpec) for t in tentacles):
            dims.add(2)
        if ambient_dim is not None:
            dims.add(ambient_dim)
        if len(dims) != 1:
            raise InputError(f"tentacles disagree on the ambient dimension: {sorted(dims)}")
        self.tentacles: List[Tentacle] = list(tentacles)
        self.ambient_dim = dims.pop()

    def puiseux_specs(self) -> List[SemidegreeSpec]:
        return [t for t in self.tentacles if isinstance(t, SemidegreeSpec)]

    def standard_specs(self) -> List[StandardTentacleSpec]:
        return [t for t in self.tentacles if isinstance(t, StandardTentacleSpec)]

    def integrality_index(self) -> int:
        """Positive N such that every value of delta_bar lies in (1/N)Z."""
        index = 1
        for t in self.tentacles:
            if isinstance(t, SemidegreeSpec):
                index = lcm(index, t.ram)
            elif t.phi_z > 0:
                index = lcm(index, t.phi_z)
        return index

    def __len__(self) -> int:
        return len(self.tentacles)

    def __repr__(self) -> str:
        return f"TentacleSet(n={self.ambient_dim}, tentacles={self.tentacles})"


def as_laurent(f: Polynomial) -> LaurentPoly2:
    return f if isinstance(f, LaurentPoly2) else f.to_laurent2()


def as_multipoly(f: Polynomial) -> MultiPoly:
    return f if isinstance(f, MultiPoly) else MultiPoly.from_laurent2(f)


def delta_star(spec: SemidegreeSpec, f: Polynomial) -> Fraction:
    """Leading x-exponent of ``f(x, phi(x) + xi * x^omega)``."""
    if spec.is_total_degree:
        raise InputError("delta_star needs a Puiseux spec, not the total degree")
    g = as_laurent(f)
    if g.is_zero():
        raise ZeroPolynomialError("delta_star of the zero polynomial is undefined")
    exp, _ = substitute(g, spec.generic_series()).leading_term()
    return exp


def phi_z(z: Sequence[int]) -> int:
    """``max(0, z_1, ..., z_n)``."""
    return max([0, *z])


def weighted_degree(z: Sequence[int], f: Polynomial) -> int:
    """``deg_z(f)``: the largest ``z . alpha`` over the support of ``f``."""
    value = as_multipoly(f).weighted_degree(list(z))
    return int(value)


def tentacle_value(tentacle: Tentacle, f: Polynomial) -> Fraction:
    """Contribution of a single tentacle to delta_bar, before clamping at 0."""
    if isinstance(tentacle, StandardTentacleSpec):
        phi = tentacle.phi_z
        if phi == 0:
            return Fraction(0)
        return Fraction(weighted_degree(tentacle.z, f), phi)
    if tentacle.is_total_degree:
        return Fraction(as_multipoly(f).total_degree())
    return delta_star(tentacle, f)


def delta_bar(S: TentacleSet, f: Polynomial) -> Fraction:
    """Normalized degree-like function of S: max(0, max over tentacles)."""
    poly = as_multipoly(f)
    if poly.is_zero():
        raise ZeroPolynomialError("delta_bar of the zero polynomial is undefined")
    if poly.nvars != S.ambient_dim:
        raise InputError(
            f"polynomial has {poly.nvars} variables, the set lives in dimension {S.ambient_dim}"
        )
    if not poly.is_polynomial() and any(
        not isinstance(t, SemidegreeSpec) or t.is_total_degree for t in S.tentacles
    ):
        raise InputError("negative powers of x are evaluated on Puiseux tentacles only")
    return max([Fraction(0)] + [tentacle_value(t, poly) for t in S.tentacles])


def delta_S(S: TentacleSet, f: Polynomial) -> int:
    """Degree-like function of S: the ceiling of delta_bar."""
    return math.ceil(delta_bar(S, f))


class SemidegreeEngine(Component):
    """Engine evaluating degree-like functions; keeps no state besides its name."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("semidegree", config)

    def config_errors(self) -> List[str]:
        return []

    def evaluate(self, S: TentacleSet, f: Polynomial) -> Dict[str, Any]:
        """All three degree-like values of ``f`` on ``S``."""
        stars: List[Optional[Fraction]] = []
        for t in S.tentacles:
            if isinstance(t, SemidegreeSpec) and not t.is_total_degree:
                stars.append(delta_star(t, f))
            else:
                stars.append(None)
        value = delta_bar(S, f)
        logger.debug("delta_bar(%s) = %s", f, value)
        return {"delta_star": stars, "delta_bar": value, "delta_S": math.ceil(value)}
