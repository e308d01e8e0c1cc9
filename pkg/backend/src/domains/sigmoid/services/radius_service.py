"""
Radius Service
Every sigmoid-starlikeness radius: closed-form evaluation for most classes
and bracketed root extraction for the transcendental ones.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from typing import Any

from src.core.exceptions import FormulaError, WrongMethodError

from ..catalog import (
    SQRT2,
    ClassId,
    ParamSet,
    RadiusKind,
    get_class_spec,
    validate_params,
)
from ..domain import E, LOWER_ENDPOINT
from .root_finding import solve_bracketed

logger = logging.getLogger(__name__)

ROOT_BRACKET = (1e-15, 1 - 1e-15)


class RadiusMethod(str, Enum):
    CLOSED_FORM = "closed-form"
    ROOT = "root"
    ORACLE = "oracle"


@dataclass(frozen=True)
class RadiusResult:
    """
    A computed radius.

    Attributes:
        class_id: Class the radius belongs to.
        params: Parameters it was computed for.
        value: Radius in (0, 1].
        method: How it was obtained.
        residual: |equation| at the root for root methods, 0 for closed forms.
    """

    class_id: ClassId
    params: ParamSet
    value: float
    method: RadiusMethod
    residual: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.value) and 0 < self.value <= 1):
            raise FormulaError(
                f"{self.class_id.value}: radius {self.value!r} outside (0, 1]"
            )

    @property
    def relevant_params(self) -> dict[str, Any]:
        return get_class_spec(self.class_id).relevant_params(self.params)


def _nth_root(value: float, n: int) -> float:
    return value ** (1 / n)


def _janowski(p: ParamSet) -> float:
    e = E
    if p.B >= 0:
        base = (e - 1) / (p.A * (1 + e) - 2 * p.B)
    else:
        base = (e - 1) / (p.A * (1 + e) - 2 * p.B * e)
    return min(1.0, _nth_root(base, p.n))


def _starlike_alpha(p: ParamSet) -> float:
    return _janowski(ParamSet(A=1 - 2 * p.alpha, B=-1.0, n=1))


def _bs(p: ParamSet) -> float:
    e = E
    return 2 * (e - 1) / ((1 + e) + math.sqrt((1 + e) ** 2 + 4 * p.alpha * (e - 1) ** 2))


def lemniscate_literal_radius(alpha: float) -> float:
    """
    Literal lemniscate radius expression, without the whole-disk cut-off.

    Below alpha = 2/(1+e) it is the radius. Above it the expression falls
    back towards 0 at the top of the alpha range, although every r < 1 works.
    """
    e = E
    return ((e - 1) * (3 + e - 2 * alpha * (1 + e))) / ((1 - alpha) ** 2 * (1 + e) ** 2)


def _lemniscate_alpha(p: ParamSet) -> float:
    if p.alpha >= LOWER_ENDPOINT:
        # q(-1) = alpha already lies right of the domain's left end
        return 1.0
    return lemniscate_literal_radius(p.alpha)


def _exp_alpha(p: ParamSet) -> float:
    e, a = E, p.alpha
    return math.log((2 * e - a * (1 + e)) / ((1 + e) * (1 - a)))


def _rl(p: ParamSet) -> float:
    e = E
    numerator = (4 * SQRT2 - 7 * e - 5) * (e - 1)
    denominator = 32 * SQRT2 - 7 * e**2 + 6 * e * (4 * SQRT2 - 5) - 47
    return numerator / denominator


def _cardioid(p: ParamSet) -> float:
    e = E
    return -1 + math.sqrt((-1 + 5 * e) / (2 + 2 * e))


def _rational(p: ParamSet) -> float:
    e = E
    return (math.sqrt((2 * SQRT2 + 3) * (2 * e**2 - 1)) - (SQRT2 + 1) * e) / (1 + e)


def _crescent(p: ParamSet) -> float:
    e = E
    return (-1 - 2 * e + 3 * e**2) / (4 * e + 4 * e**2)


def _sine(p: ParamSet) -> float:
    e = E
    return math.log((math.sqrt(2 * (1 + e**2)) + e - 1) / (1 + e))


def _g1(p: ParamSet) -> float:
    e, n = E, p.n
    t = (e - 1) / (2 * n * (1 + e) + math.sqrt(4 * n**2 * (1 + e) ** 2 + (e - 1) ** 2))
    return _nth_root(t, n)


def _g2_g3(p: ParamSet) -> float:
    e, n = E, p.n
    discriminant = (3 * n * (e + 1)) ** 2 + 4 * (e - 1) * (n * (e + 1) + (e - 1))
    return (2 * (e - 1)) ** (1 / n) / (3 * n * (1 + e) + math.sqrt(discriminant)) ** (1 / n)


def _g4(p: ParamSet) -> float:
    e, n = E, p.n
    discriminant = (n + 1) ** 2 * (1 + e) ** 2 + 4 * (e - 1) * ((e + 1) * n - 2)
    return (2 * (e - 1)) ** (1 / n) / ((n + 1) * (1 + e) + math.sqrt(discriminant)) ** (1 / n)


def _close_to_starlike(p: ParamSet) -> float:
    # The quadratic is in t = r^n
    e, n, a = E, p.n, p.alpha
    b = (1 + e) * (1 + n - a)
    c = (1 - 2 * a) * (e + 1) + 2 * e
    t = (e - 1) / (b + math.sqrt((e + 1) ** 2 * (1 + n - a) ** 2 + (e - 1) * c))
    return _nth_root(t, n)


def _w(p: ParamSet) -> float:
    e, n = E, p.n
    t = (e - 1) / (math.sqrt(n**2 * (e + 1) ** 2 + (e - 1) ** 2) + n * (e + 1))
    return _nth_root(t, n)


def _m_beta(p: ParamSet) -> float:
    e = E
    return _nth_root((e - 1) / ((e - 1) + (e + 1) * p.beta - 1), p.n)


def m_beta_disk_radius(beta: float, n: int = 1) -> float:
    """
    M(beta) radius from the image disk of (1+(1-2 beta)z^n)/(1-z^n).

    The disk has its centre left of 1, so it first meets the domain at the
    left endpoint 2/(1+e). Reported next to the literal formula, never in
    place of it.
    """
    e = E
    return _nth_root((e - 1) / ((e - 1) + 2 * (e + 1) * (beta - 1)), n)


CLOSED_FORMS: dict[ClassId, Callable[[ParamSet], float]] = {
    ClassId.JANOWSKI: _janowski,
    ClassId.STARLIKE_ALPHA: _starlike_alpha,
    ClassId.BS: _bs,
    ClassId.LEMNISCATE_ALPHA: _lemniscate_alpha,
    ClassId.EXP_ALPHA: _exp_alpha,
    ClassId.RL: _rl,
    ClassId.CARDIOID_C: _cardioid,
    ClassId.RATIONAL_R: _rational,
    ClassId.CRESCENT: _crescent,
    ClassId.SINE: _sine,
    ClassId.G1: _g1,
    ClassId.G2: _g2_g3,
    ClassId.G3: _g2_g3,
    ClassId.G4: _g4,
    ClassId.CLOSE_TO_STARLIKE: _close_to_starlike,
    ClassId.W_CLASS: _w,
    ClassId.M_BETA: _m_beta,
}


def _pe_equation(p: ParamSet) -> Callable[[float], float]:
    return lambda r: (E + 1) * r * math.exp(r) - (E - 1)


def _nephroid_equation(p: ParamSet) -> Callable[[float], float]:
    return lambda r: (E + 1) * (3 * r + r**3) - 3 * (E - 1)


def _convexity_equation(p: ParamSet) -> Callable[[float], float]:
    alpha = p.alpha
    return lambda r: math.exp(r) * (r + alpha) - 2 + alpha


ROOT_EQUATIONS: dict[ClassId, Callable[[ParamSet], Callable[[float], float]]] = {
    ClassId.PE: _pe_equation,
    ClassId.NEPHROID: _nephroid_equation,
    ClassId.CONVEXITY_ORDER: _convexity_equation,
}


def closed_form_radius(class_id: "ClassId | str", params: ParamSet) -> RadiusResult:
    """
    Evaluate the closed-form radius of a class.

    Args:
        class_id: Class identifier or CLI name.
        params: Class parameters; only the relevant fields are read.

    Returns:
        RadiusResult with method closed-form and zero residual.

    Raises:
        DomainError: If the parameters are outside the class domain.
        WrongMethodError: If the class is defined by a root equation.
        FormulaError: If the formula leaves (0, 1].
    """
    spec = get_class_spec(class_id)
    if spec.radius_kind is not RadiusKind.CLOSED_FORM:
        raise WrongMethodError(f"{spec.id.value} radius is a root equation, not a closed form")
    validate_params(spec.id, params)

    try:
        value = CLOSED_FORMS[spec.id](params)
    except (ValueError, ZeroDivisionError) as e:
        raise FormulaError(f"{spec.id.value}: formula failed for {params}: {e}") from e

    logger.debug(f"closed form {spec.id.value} {spec.relevant_params(params)} -> {value!r}")
    return RadiusResult(spec.id, params, value, RadiusMethod.CLOSED_FORM, 0.0)


def root_radius(class_id: "ClassId | str", params: ParamSet) -> RadiusResult:
    """
    Smallest positive root of the class's radius equation on (0, 1).

    Raises:
        DomainError: If the parameters are outside the class domain.
        WrongMethodError: If the class has a closed form.
        BracketError: If the equation has no sign change on (0, 1).
    """
    spec = get_class_spec(class_id)
    if spec.radius_kind is not RadiusKind.ROOT_EQUATION:
        raise WrongMethodError(f"{spec.id.value} radius is a closed form, not a root equation")
    validate_params(spec.id, params)

    equation = ROOT_EQUATIONS[spec.id](params)
    value = solve_bracketed(equation, *ROOT_BRACKET)
    residual = abs(equation(value))

    logger.debug(f"root {spec.id.value} {spec.relevant_params(params)} -> {value!r}")
    return RadiusResult(spec.id, params, value, RadiusMethod.ROOT, residual)


def compute_radius(class_id: "ClassId | str", params: ParamSet) -> RadiusResult:
    """Dispatch to closed_form_radius or root_radius by the class's radius kind."""
    spec = get_class_spec(class_id)
    if spec.radius_kind is RadiusKind.ROOT_EQUATION:
        return root_radius(spec.id, params)
    return closed_form_radius(spec.id, params)
