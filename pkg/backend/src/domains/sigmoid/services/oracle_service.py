"""
Sharpness Oracle Service
Independent numerical check of every radius: bisect on r for the largest
circle whose image under the extremal q stays inside the sigmoid domain,
and locate where the image touches the boundary.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from src.config.oracle import OracleSettings, get_oracle_settings
from src.core.exceptions import BracketError, DomainError
from src.core.optimize import golden_section_max

from ..catalog import (
    ClassId,
    CsReading,
    ParamSet,
    Sharpness,
    convexity_functional_array,
    get_class_spec,
    validate_params,
)
from ..domain import LOWER_ENDPOINT, BoundaryTrace, sg_modulus_array
from .radius_service import compute_radius, lemniscate_literal_radius, m_beta_disk_radius

logger = logging.getLogger(__name__)

TWO_PI = 2 * math.pi

# Sampled values this close to the maximum count as ties
TIE_BAND = 1e-12

AngleFunction = Callable[[np.ndarray], np.ndarray]


class VerificationStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    FLAGGED = "FLAGGED"
    FINDING = "FINDING"


class CircleMax(NamedTuple):
    value: float
    angle: float


@dataclass(frozen=True)
class OracleReport:
    """
    Outcome of one formula-versus-oracle comparison.

    Attributes:
        class_id: Verified class.
        params: Class parameters.
        oracle_radius: Largest r found by bisection, within radius_tolerance.
        formula_radius: Radius from the closed form or root equation.
        abs_gap: |oracle_radius - formula_radius|.
        touch_angle: Argument of the z where the extremal image meets the boundary.
        max_modulus_at_formula_radius: Circle max of |log(q/(2-q))| at the formula
            radius; None for the convexity oracle.
        min_real_part_at_formula_radius: Circle min of Re(1 + z f''/f') for the
            convexity oracle; None otherwise.
        sharp_at_bracket: False when the bracket ceiling was already contained.
        status: PASS, FAIL, FLAGGED or FINDING.
        notes: Extra findings (alternate readings, disk-derived values).
    """

    class_id: ClassId
    params: ParamSet
    oracle_radius: float
    formula_radius: float
    abs_gap: float
    touch_angle: float
    max_modulus_at_formula_radius: float | None
    min_real_part_at_formula_radius: float | None = None
    sharp_at_bracket: bool = True
    status: VerificationStatus = VerificationStatus.PASS
    notes: tuple[str, ...] = ()

    @property
    def relevant_params(self) -> dict:
        return get_class_spec(self.class_id).relevant_params(self.params)

    @property
    def failed(self) -> bool:
        return self.status is VerificationStatus.FAIL


def _modulus_on_circle(class_id: ClassId, params: ParamSet, r: float) -> AngleFunction:
    q = get_class_spec(class_id).q

    def evaluate(angles: np.ndarray) -> np.ndarray:
        z = r * np.exp(1j * angles)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            return sg_modulus_array(q(z, params))

    return evaluate


def _negated_real_part_on_circle(r: float) -> AngleFunction:
    def evaluate(angles: np.ndarray) -> np.ndarray:
        z = r * np.exp(1j * angles)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            return -convexity_functional_array(z).real

    return evaluate


def _refined_max(fn: AngleFunction, samples: int, angle_tolerance: float) -> CircleMax:
    angles = TWO_PI * np.arange(samples) / samples
    values = fn(angles)
    if not np.all(np.isfinite(values)):
        return CircleMax(math.inf, float(angles[np.argmin(np.isfinite(values))]))

    best = float(values.max())
    index = int(np.flatnonzero(values >= best - TIE_BAND)[0])
    angle = float(angles[index])

    step = TWO_PI / samples
    refined_angle, refined_value = golden_section_max(
        lambda t: float(fn(np.array([t]))[0]),
        angle - step,
        angle + step,
        tol=angle_tolerance,
    )
    if refined_value > best:
        return CircleMax(refined_value, refined_angle % TWO_PI)
    return CircleMax(best, angle)


def _adaptive_max(
    fn: AngleFunction,
    samples: int,
    settings: OracleSettings,
) -> CircleMax:
    """Double the sample count until the refined maximum settles."""
    result = _refined_max(fn, samples, settings.angle_tolerance)
    while not math.isinf(result.value) and samples * 2 <= settings.max_samples:
        samples *= 2
        finer = _refined_max(fn, samples, settings.angle_tolerance)
        settled = abs(finer.value - result.value) < settings.refine_tolerance
        result = finer
        if settled:
            break
    return result


def circle_max_h(
    class_id: "ClassId | str",
    params: ParamSet,
    r: float,
    samples: int | None = None,
    settings: OracleSettings | None = None,
) -> CircleMax:
    """
    Maximum of |log(q(z)/(2-q(z)))| over |z| = r.

    By the maximum principle this decides whether q maps the whole disk
    |z| <= r into the domain.

    Args:
        class_id: Class whose extremal q is sampled.
        params: Class parameters.
        r: Circle radius in (0, 1).
        samples: Initial sample count, defaults to the configured one.
        settings: Oracle settings, defaults to the cached ones.

    Returns:
        CircleMax(value, angle); value is +inf if q reaches 0, 2 or a pole.

    Raises:
        DomainError: If r is outside (0, 1) or the parameters are invalid.
    """
    spec = get_class_spec(class_id)
    validate_params(spec.id, params)
    if not 0 < r < 1:
        raise DomainError(f"circle radius must lie in (0, 1), got {r}")
    settings = settings or get_oracle_settings()
    return _adaptive_max(
        _modulus_on_circle(spec.id, params, r),
        samples or settings.samples,
        settings,
    )


def _sampling_collapses(spec, params: ParamSet, samples: int) -> bool:
    if "n" not in spec.param_names or params.n % samples:
        return False
    # the linear close-to-starlike term still sees z itself
    return not (
        spec.id is ClassId.CLOSE_TO_STARLIKE and params.cs_reading is CsReading.LINEAR
    )


def circle_image(
    class_id: "ClassId | str",
    params: ParamSet,
    r: float,
    samples: int,
) -> BoundaryTrace:
    """
    Sample q(r e^{it}) at t = 2 pi k / samples.

    Classes of order n see the circle through z^n, so a sample count that
    divides n maps every sample to the same point and is rejected.

    Raises:
        DomainError: If r is outside (0, 1), samples is below 3 or divides n,
            or q is not finite on the circle.
    """
    spec = get_class_spec(class_id)
    validate_params(spec.id, params)
    if not 0 < r < 1:
        raise DomainError(f"circle radius must lie in (0, 1), got {r}")
    if samples < 3:
        raise DomainError(f"samples must be >= 3, got {samples}")
    if _sampling_collapses(spec, params, samples):
        raise DomainError(
            f"{samples} samples divide the order n={params.n} of {spec.id.value}: "
            f"every sample lands on q(r^n); pick a count that does not divide n"
        )
    angles = TWO_PI * np.arange(samples) / samples
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        points = spec.q(r * np.exp(1j * angles), params)
    if not np.all(np.isfinite(points)):
        raise DomainError(f"{spec.id.value}: q has a pole on |z| = {r}")
    return BoundaryTrace(
        points=tuple(complex(p) for p in points),
        angles=tuple(float(t) for t in angles),
        closed=True,
    )


def _check_avoids_singularities(spec, params: ParamSet, radius: float) -> None:
    """Coarse polar grid check that q stays finite and away from 0 and 2."""
    radii = np.linspace(0, radius, 17)[1:, None]
    angles = TWO_PI * np.arange(64)[None, :] / 64
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        values = spec.q(radii * np.exp(1j * angles), params)
    if not np.all(np.isfinite(values)) or np.any(np.abs(values) < 1e-12) or np.any(
        np.abs(values - 2) < 1e-12
    ):
        raise DomainError(
            f"{spec.id.value}: extremal q meets a pole or {{0, 2}} inside |z| <= {radius:.6f}"
        )


def _bisect_radius(
    excess: Callable[[float], float],
    formula_radius: float,
    settings: OracleSettings,
) -> tuple[float, bool]:
    """
    Largest r with excess(r) <= 0, excess nondecreasing in r.

    Returns:
        (radius, sharp_at_bracket).
    """
    lo = settings.bracket_floor
    hi = min(settings.bracket_ceiling, settings.bracket_growth * formula_radius)
    if excess(hi) <= 0:
        return hi, False
    if excess(lo) > 0:
        raise BracketError(f"Containment already fails at the bracket floor r={lo}")

    while hi - lo > settings.radius_tolerance:
        mid = (lo + hi) / 2
        if excess(mid) <= 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2, True


def _status(
    spec,
    params: ParamSet,
    abs_gap: float,
    formula_radius: float,
    sharp_at_bracket: bool,
    settings: OracleSettings,
) -> VerificationStatus:
    if spec.is_flagged(params):
        return VerificationStatus.FLAGGED
    if spec.sharpness is Sharpness.UNCLAIMED:
        return VerificationStatus.FINDING
    if abs_gap <= settings.gap_tolerance:
        return VerificationStatus.PASS
    if not sharp_at_bracket and formula_radius >= settings.bracket_ceiling:
        return VerificationStatus.PASS
    return VerificationStatus.FAIL


def _containment_radius(
    class_id: ClassId,
    params: ParamSet,
    formula_radius: float,
    settings: OracleSettings,
) -> tuple[float, bool]:
    def excess(r: float) -> float:
        return circle_max_h(class_id, params, r, settings=settings).value - 1

    return _bisect_radius(excess, formula_radius, settings)


def _notes(
    spec,
    params: ParamSet,
    formula: float,
    oracle: float,
    settings: OracleSettings,
) -> tuple[str, ...]:
    if spec.id is ClassId.M_BETA:
        disk = m_beta_disk_radius(params.beta, params.n)
        return (
            f"literal formula {formula:.6f}; disk-derived radius {disk:.6f}; "
            f"oracle {oracle:.6f}",
        )
    if spec.id is ClassId.LEMNISCATE_ALPHA and params.alpha >= LOWER_ENDPOINT:
        literal = lemniscate_literal_radius(params.alpha)
        return (
            f"literal formula {literal:.6f}; whole disk since alpha >= 2/(1+e); "
            f"oracle {oracle:.6f}",
        )
    if spec.id is ClassId.CLOSE_TO_STARLIKE and params.n > 1:
        other = (
            CsReading.POWER if params.cs_reading is CsReading.LINEAR else CsReading.LINEAR
        )
        alternate = params.with_updates(cs_reading=other)
        formula = compute_radius(spec.id, alternate).value
        other_oracle, _ = _containment_radius(spec.id, alternate, formula, settings)
        return (
            f"{params.cs_reading.value} reading oracle {oracle:.6f}; "
            f"{other.value} reading oracle {other_oracle:.6f}",
        )
    if spec.sharpness is Sharpness.UNCLAIMED:
        return ("sharpness not claimed for this class; gap reported as a finding",)
    return ()


def oracle_radius(
    class_id: "ClassId | str",
    params: ParamSet,
    settings: OracleSettings | None = None,
) -> OracleReport:
    """
    Compare a class's formula radius with the bisection oracle.

    Args:
        class_id: Class identifier or CLI name.
        params: Class parameters.
        settings: Oracle settings, defaults to the cached ones.

    Returns:
        OracleReport with gap, touch angle and status.

    Raises:
        DomainError: For invalid parameters or a singular extremal.
        BracketError: If containment fails even at the bracket floor.
    """
    spec = get_class_spec(class_id)
    if spec.id is ClassId.CONVEXITY_ORDER:
        return convexity_oracle(params.alpha, settings)
    validate_params(spec.id, params)
    settings = settings or get_oracle_settings()

    formula = compute_radius(spec.id, params).value
    check_radius = min(formula, settings.bracket_ceiling)
    _check_avoids_singularities(spec, params, check_radius)

    oracle, sharp_at_bracket = _containment_radius(spec.id, params, formula, settings)
    touch = circle_max_h(spec.id, params, oracle, settings=settings)
    at_formula = circle_max_h(spec.id, params, check_radius, settings=settings)
    abs_gap = abs(oracle - formula)

    report = OracleReport(
        class_id=spec.id,
        params=params,
        oracle_radius=oracle,
        formula_radius=formula,
        abs_gap=abs_gap,
        touch_angle=touch.angle,
        max_modulus_at_formula_radius=at_formula.value,
        sharp_at_bracket=sharp_at_bracket,
        status=_status(spec, params, abs_gap, formula, sharp_at_bracket, settings),
        notes=_notes(spec, params, formula, oracle, settings),
    )
    logger.debug(
        f"oracle {spec.id.value} {spec.relevant_params(params)}: formula={formula:.9f} "
        f"oracle={oracle:.9f} gap={abs_gap:.2e} status={report.status.value}"
    )
    return report


def convexity_min_real_part(
    r: float,
    samples: int | None = None,
    settings: OracleSettings | None = None,
) -> CircleMax:
    """
    Minimum of Re(1 + z f0''/f0') over |z| = r, and the angle attaining it.

    Raises:
        DomainError: If r is outside (0, 1).
    """
    if not 0 < r < 1:
        raise DomainError(f"circle radius must lie in (0, 1), got {r}")
    settings = settings or get_oracle_settings()
    negated = _adaptive_max(_negated_real_part_on_circle(r), samples or settings.samples, settings)
    return CircleMax(-negated.value, negated.angle)


def convexity_oracle(alpha: float, settings: OracleSettings | None = None) -> OracleReport:
    """
    Radius of convexity of order alpha, by bisection on the circle minimum.

    Args:
        alpha: Order in [0, 1).
        settings: Oracle settings, defaults to the cached ones.

    Returns:
        OracleReport; the touch angle is expected at pi.
    """
    params = ParamSet(alpha=alpha)
    spec = get_class_spec(ClassId.CONVEXITY_ORDER)
    validate_params(spec.id, params)
    settings = settings or get_oracle_settings()

    formula = compute_radius(spec.id, params).value

    def excess(r: float) -> float:
        return alpha - convexity_min_real_part(r, settings=settings).value

    oracle, sharp_at_bracket = _bisect_radius(excess, formula, settings)
    touch = convexity_min_real_part(oracle, settings=settings)
    at_formula = convexity_min_real_part(min(formula, settings.bracket_ceiling), settings=settings)
    abs_gap = abs(oracle - formula)

    report = OracleReport(
        class_id=spec.id,
        params=params,
        oracle_radius=oracle,
        formula_radius=formula,
        abs_gap=abs_gap,
        touch_angle=touch.angle,
        max_modulus_at_formula_radius=None,
        min_real_part_at_formula_radius=at_formula.value,
        sharp_at_bracket=sharp_at_bracket,
        status=_status(spec, params, abs_gap, formula, sharp_at_bracket, settings),
    )
    logger.debug(
        f"convexity oracle alpha={alpha}: formula={formula:.9f} oracle={oracle:.9f} "
        f"gap={abs_gap:.2e}"
    )
    return report
