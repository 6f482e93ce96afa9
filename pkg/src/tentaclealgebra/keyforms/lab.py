"""Key forms of a semidegree, positivity tests and classification of B(S)."""
import logging
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Optional, Tuple

from ..core.component import Component, positive_int_errors
from ..errors import InputError, UnsupportedInputError
from ..exact.rational import format_rat
from ..exact.series import LaurentPoly2, PuiseuxSeries, substitute
from ..puiseux.expansion import SemidegreeSpec
from ..semidegree.engine import TentacleSet
from .sequence import KeyFormSequence, digit_representation, monomial_product, period

logger = logging.getLogger(__name__)

DEFAULT_MAX_FORMS = 16


class MomentStatus(Enum):
    """What is known about solving the moment problem on S with finitely many polynomials."""

    NOT_SOLVABLE_FINITELY = "not_solvable_finitely"
    SOLVABLE_OUTSIDE_COMPACT = "solvable_outside_compact"
    OPEN_NEW_METHODS = "open_new_methods"
    NEEDS_GENUS = "needs_genus"


class Classification:
    """Answers to the finiteness questions for B(S).

    Args:
        b0_trivial: B_0(S) consists of the constants only
        b_fg: B(S) is a finitely generated algebra
        bd_all_finite: Every B_d(S) is finite dimensional
        some_bd_infinite: Some B_d(S) is infinite dimensional
        last_form_polynomial: The last key form has no negative x-power
        omega_last: Value of the last key form (None outside the key-form route)
        moment_status: Moment-problem verdict (None when no criterion applies)
        semidegree: delta_bar is a semidegree
        method: How the verdict was reached
    """

    def __init__(
        self,
        b0_trivial: bool,
        b_fg: bool,
        bd_all_finite: bool,
        some_bd_infinite: bool,
        last_form_polynomial: bool,
        omega_last: Optional[Fraction],
        moment_status: Optional[MomentStatus],
        semidegree: bool,
        method: str,
    ):
        self.b0_trivial = b0_trivial
        self.b_fg = b_fg
        self.bd_all_finite = bd_all_finite
        self.some_bd_infinite = some_bd_infinite
        self.last_form_polynomial = last_form_polynomial
        self.omega_last = omega_last
        self.moment_status = moment_status
        self.semidegree = semidegree
        self.method = method

    def to_dict(self) -> Dict[str, Any]:
        return {
            "b0_trivial": self.b0_trivial,
            "b_fg": self.b_fg,
            "bd_all_finite": self.bd_all_finite,
            "some_bd_infinite": self.some_bd_infinite,
            "last_form_polynomial": self.last_form_polynomial,
            "omega_last": None if self.omega_last is None else format_rat(self.omega_last),
            "moment_status": None if self.moment_status is None else self.moment_status.value,
            "semidegree": self.semidegree,
            "method": self.method,
        }

    def __repr__(self) -> str:
        return f"Classification({self.to_dict()})"


def keyforms_of_spec(spec: SemidegreeSpec, max_forms: int = DEFAULT_MAX_FORMS) -> KeyFormSequence:
    """Key forms of the semidegree of a generic series.

    Starting from ``x, y``, each candidate form is substituted into the
    generic series. A constant leading coefficient means the value can still
    drop: the next form cancels that leading term against the monomial in the
    earlier forms of the same value. A leading coefficient involving xi ends
    the sequence.

    Raises:
        UnsupportedInputError: If the sequence does not end within ``max_forms`` forms
    """
    if spec.is_total_degree:
        raise InputError("the total degree has no key forms beyond x, y")
    series = spec.generic_series()
    forms = [LaurentPoly2.x(), LaurentPoly2.y()]
    values = [Fraction(1)]
    periods = [1]
    digits: List[Tuple[int, ...]] = [()]
    consts = [Fraction(1)]
    k = 1
    while True:
        exp, lead = substitute(forms[k], series).leading_term()
        values.append(exp)
        if not lead.is_constant():
            break
        if len(forms) >= max_forms:
            raise UnsupportedInputError(
                f"key forms of {spec} did not terminate within {max_forms} forms"
            )
        p = period(values[:k], exp)
        alpha = digit_representation(values[:k], periods, p * exp)
        mono = monomial_product(forms, alpha)
        mono_exp, mono_lead = substitute(mono, series).leading_term()
        if mono_exp != p * exp or not mono_lead.is_constant():
            raise UnsupportedInputError(
                f"monomial {mono} does not have value {format_rat(p * exp)}"
            )
        c = lead.constant_value() ** p / mono_lead.constant_value()
        forms.append(forms[k] ** p - mono.scale(c))
        periods.append(p)
        digits.append(alpha)
        consts.append(c)
        logger.debug("f_%d = %s with value %s", k, forms[k], format_rat(exp))
        k += 1
    return KeyFormSequence(forms, values, periods, digits, consts)


def _require_value(seq: KeyFormSequence) -> Fraction:
    omega = seq.omega_last
    if omega is None:
        raise InputError("the last key form has no assigned value")
    return omega


def is_nonnegative(seq: KeyFormSequence) -> bool:
    """The semidegree is non-negative on polynomials iff the last value is >= 0."""
    return _require_value(seq) >= 0


def is_positive(seq: KeyFormSequence) -> bool:
    """Positive iff the last value is > 0, or it is 0 and the last form is not a polynomial."""
    omega = _require_value(seq)
    return omega > 0 or (omega == 0 and not seq.last_form.is_polynomial())


def has_negative_x_digit(seq: KeyFormSequence) -> bool:
    """Some step used a negative power of x."""
    return any(seq.digits[k][0] < 0 for k in range(1, len(seq.digits)))


def classify(
    seq: KeyFormSequence,
    omega_last: Optional[Fraction] = None,
    genus_hint: Optional[int] = None,
) -> Classification:
    """Decide the finiteness questions for a single tentacle from its key forms.

    Args:
        seq: Key forms of the tentacle's semidegree
        omega_last: Value of the last form, if ``seq`` does not carry it
        genus_hint: Genus of the generic fiber of the last form, when known

    Returns:
        Classification record
    """
    if omega_last is not None:
        seq = seq.with_last_value(omega_last)
    omega = _require_value(seq)
    polynomial = all(form.is_polynomial() for form in seq.forms)
    last_polynomial = seq.last_form.is_polynomial()
    b0_trivial = omega > 0 or (omega == 0 and not last_polynomial)
    b_fg = omega < 0 or polynomial
    if omega > 0:
        moment = MomentStatus.NOT_SOLVABLE_FINITELY
    elif omega < 0:
        moment = MomentStatus.SOLVABLE_OUTSIDE_COMPACT
    elif not last_polynomial:
        moment = MomentStatus.OPEN_NEW_METHODS
    elif genus_hint is None:
        moment = MomentStatus.NEEDS_GENUS
    elif genus_hint == 0:
        moment = MomentStatus.SOLVABLE_OUTSIDE_COMPACT
    else:
        moment = MomentStatus.NOT_SOLVABLE_FINITELY
    return Classification(
        b0_trivial=b0_trivial,
        b_fg=b_fg,
        bd_all_finite=omega > 0,
        some_bd_infinite=omega <= 0,
        last_form_polynomial=last_polynomial,
        omega_last=omega,
        moment_status=moment,
        semidegree=omega >= 0,
        method="keyforms",
    )


def squares_pullback(spec: SemidegreeSpec) -> Tuple[SemidegreeSpec, SemidegreeSpec]:
    """The two integral specs pulled back along ``(x, y) -> (x^2, y)``.

    ``phi = sum a_j x^(m_j/2)`` gives ``sum a_j x^m_j`` and
    ``sum (-1)^m_j a_j x^m_j``, both with generic exponent ``2 omega``.

    Raises:
        InputError: If an exponent is not a half-integer or the doubled
            exponents have a common factor
    """
    if spec.is_total_degree:
        raise InputError("the total degree has no pullback pair")
    doubled = []
    for exp, _ in spec.phi:
        m = exp * 2
        if m.denominator != 1:
            raise InputError(f"exponent {format_rat(exp)} is not a multiple of 1/2")
        doubled.append(m.numerator)
    common = 0
    for m in doubled:
        common = gcd(common, m)
    if common != 1:
        raise InputError("the doubled exponents of phi must have gcd 1")
    first = PuiseuxSeries([(Fraction(m), c) for m, (_, c) in zip(doubled, spec.phi)])
    second = PuiseuxSeries(
        [(Fraction(m), c.scale(-1 if m % 2 else 1)) for m, (_, c) in zip(doubled, spec.phi)]
    )
    omega = spec.omega * 2
    return SemidegreeSpec(first, omega), SemidegreeSpec(second, omega)


def pullback_source(spec1: SemidegreeSpec, spec2: SemidegreeSpec) -> Optional[SemidegreeSpec]:
    """Half-integral spec whose squares pullback is ``(spec1, spec2)``, or None."""
    if spec1.is_total_degree or spec2.is_total_degree or spec1.omega != spec2.omega:
        return None
    if spec1.phi.exponents() != spec2.phi.exponents():
        return None
    terms = []
    common = 0
    for exp, coeff in spec1.phi:
        if exp.denominator != 1:
            return None
        m = exp.numerator
        sign = -1 if m % 2 else 1
        if spec2.phi.coefficient(exp) != coeff.scale(sign):
            return None
        common = gcd(common, m)
        terms.append((exp / 2, coeff))
    if common != 1:
        return None
    return SemidegreeSpec(PuiseuxSeries(terms), spec1.omega / 2)


def classify_set(
    S: TentacleSet,
    genus_hint: Optional[int] = None,
    max_forms: int = DEFAULT_MAX_FORMS,
    search_bound: int = 8,
) -> Classification:
    """Classify B(S) for the tentacle sets the criteria cover.

    A single Puiseux tentacle goes through its key forms; a pair that is the
    squares pullback of one tentacle behaves like that tentacle; the total
    degree and unions of standard tentacles have closed-form answers.

    Raises:
        UnsupportedInputError: For other unions
    """
    puiseux = S.puiseux_specs()
    standard = S.standard_specs()
    if standard and not puiseux:
        from ..cones.basis import classify_standard

        return classify_standard([t.z for t in standard], search_bound)
    if len(puiseux) == 1 and not standard:
        spec = puiseux[0]
        if spec.is_total_degree:
            return Classification(
                b0_trivial=True,
                b_fg=True,
                bd_all_finite=True,
                some_bd_infinite=False,
                last_form_polynomial=True,
                omega_last=None,
                moment_status=None,
                semidegree=True,
                method="total_degree",
            )
        return classify(keyforms_of_spec(spec, max_forms), genus_hint=genus_hint)
    if len(puiseux) == 2 and not standard:
        source = pullback_source(*puiseux)
        if source is not None:
            logger.info("tentacle pair is the squares pullback of %s", source)
            verdict = classify(keyforms_of_spec(source, max_forms), genus_hint=genus_hint)
            verdict.method = "pullback"
            return verdict
    raise UnsupportedInputError(
        "classification covers single tentacles, squares-pullback pairs and "
        "unions of standard tentacles"
    )


class KeyFormLab(Component):
    """Engine for key forms and classification."""

    defaults = {"max_forms": DEFAULT_MAX_FORMS}

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("keyforms", config)

    def config_errors(self) -> List[str]:
        errors = positive_int_errors(self.config, "max_forms")
        if not errors and self.config["max_forms"] < 2:
            errors.append("max_forms must be at least 2")
        return errors

    def keyforms(self, spec: SemidegreeSpec, max_forms: Optional[int] = None) -> KeyFormSequence:
        return keyforms_of_spec(spec, self.setting("max_forms", max_forms))

    def classify(
        self,
        S: TentacleSet,
        genus_hint: Optional[int] = None,
        search_bound: int = 8,
    ) -> Classification:
        return classify_set(S, genus_hint, self.setting("max_forms"), search_bound)
