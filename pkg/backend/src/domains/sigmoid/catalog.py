"""
Class Catalog Module
Registry of the starlike-type function classes: parameter domains,
radius kind and the extremal function's q(z) = z f'(z) / f(z).

Evaluators take numpy arrays so the oracle can sample whole circles at once;
``extremal_q`` is the scalar entry point.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass, field, replace
from enum import Enum
from types import MappingProxyType
from typing import Any

import numpy as np

from src.core.complex_math import int_power, sqrt_array
from src.core.exceptions import DomainError, UnknownClassError

from .domain import E

SQRT2 = math.sqrt(2)
RATIONAL_K = SQRT2 + 1  # k = sqrt(2) + 1 of the rational class

LEMNISCATE_ALPHA_MAX = (3 + E) / (2 * (1 + E))
EXP_ALPHA_MAX = E / (1 + E)
MAX_N = 64

Evaluator = Callable[[np.ndarray, "ParamSet"], np.ndarray]


class ClassId(str, Enum):
    """Function classes; values are the CLI names."""

    JANOWSKI = "janowski"
    STARLIKE_ALPHA = "starlike-alpha"
    BS = "bs"
    LEMNISCATE_ALPHA = "lemniscate-alpha"
    EXP_ALPHA = "exp-alpha"
    RL = "rl"
    CARDIOID_C = "cardioid"
    RATIONAL_R = "rational"
    CRESCENT = "crescent"
    PE = "pe"
    NEPHROID = "nephroid"
    SINE = "sine"
    G1 = "g1"
    G2 = "g2"
    G3 = "g3"
    G4 = "g4"
    CLOSE_TO_STARLIKE = "close-to-starlike"
    W_CLASS = "w"
    M_BETA = "m-beta"
    CONVEXITY_ORDER = "convexity-order"


class RadiusKind(str, Enum):
    CLOSED_FORM = "closed-form"
    ROOT_EQUATION = "root-equation"


class Sharpness(str, Enum):
    """Whether the radius is claimed to be attained by the extremal function."""

    CLAIMED = "claimed"
    UNCLAIMED = "unclaimed"
    AMBIGUOUS = "ambiguous"


class CsReading(str, Enum):
    """Denominator of the close-to-starlike extremal: (1-z) as printed, or (1-z^n)."""

    LINEAR = "linear"
    POWER = "power"


@dataclass(frozen=True)
class ParamSet:
    """Class parameters; each class reads only its own fields."""

    A: float = 1.0
    B: float = -1.0
    alpha: float = 0.0
    beta: float = 2.0
    n: int = 1
    cs_reading: CsReading = CsReading.LINEAR

    def with_updates(self, **changes: Any) -> "ParamSet":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


@dataclass(frozen=True)
class ClassSpec:
    """
    Registry entry for one function class.

    Attributes:
        id: Class identifier.
        title: Human-readable name.
        radius_kind: Closed form or smallest root of a transcendental equation.
        param_names: ParamSet fields the class reads.
        q: Array evaluator of z f'/f for the extremal function.
        touch_points: Where the extremal image meets the domain boundary.
        extremal_f: Array evaluator of the extremal function itself, if known.
        sharpness: Whether the radius is claimed to be sharp.
    """

    id: ClassId
    title: str
    radius_kind: RadiusKind
    param_names: tuple[str, ...]
    q: Evaluator
    touch_points: str
    extremal_f: Evaluator | None = None
    sharpness: Sharpness = Sharpness.CLAIMED
    alpha_max: float | None = field(default=None)

    def is_flagged(self, params: ParamSet) -> bool:
        """True when the formula for these parameters is ambiguous as published."""
        if self.sharpness is Sharpness.AMBIGUOUS:
            return True
        return self.id is ClassId.CLOSE_TO_STARLIKE and params.n > 1

    def relevant_params(self, params: ParamSet) -> dict[str, Any]:
        values = {}
        for name in self.param_names:
            value = getattr(params, name)
            values[name] = value.value if isinstance(value, Enum) else value
        if self.id is ClassId.CLOSE_TO_STARLIKE and params.n > 1:
            values["cs_reading"] = params.cs_reading.value
        return values


# --- extremal q evaluators -------------------------------------------------


def _janowski_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    return (1 + p.A * t) / (1 + p.B * t)


def _starlike_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    return (1 + (1 - 2 * p.alpha) * z) / (1 - z)


def _bs_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    return 1 + z / (1 - p.alpha * z * z)


def _lemniscate_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    return p.alpha + (1 - p.alpha) * sqrt_array(1 + z)


def _exp_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    return p.alpha + (1 - p.alpha) * np.exp(z)


def _rl_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    c = 2 * (SQRT2 - 1)
    return SQRT2 - (SQRT2 - 1) * sqrt_array((1 - z) / (1 + c * z))


def _cardioid_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    return 1 + 4 * z / 3 + 2 * z * z / 3


def _rational_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    k = RATIONAL_K
    return 1 + z * (k + z) / (k * (k - z))


def _crescent_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    return z + sqrt_array(1 + z * z)


def _pe_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    return 1 + z * np.exp(z)


def _nephroid_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    return 1 + z - z**3 / 3


def _sine_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    return 1 + np.sin(z)


def _g1_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    return 1 + 4 * p.n * t / (1 - t * t)


def _g2_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    return (1 + 3 * p.n * t + (p.n - 1) * t * t) / (1 - t * t)


def _g3_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    return 1 + 2 * p.n * t / (1 + t) + p.n * t / (1 - t)


def _g4_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    return 1 + p.n * t / (1 + t) + t / (1 - t)


def _cs_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    exponent = p.n + 2 - 2 * p.alpha
    if p.cs_reading is CsReading.POWER:
        return 1 + p.n * t / (1 + t) + exponent * t / (1 - t)
    return 1 + p.n * t / (1 + t) + (exponent / p.n) * z / (1 - z)


def _w_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    return 1 + 2 * p.n * t / (1 - t * t)


def _m_beta_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    return 1 - 2 * (p.beta - 1) * t / (1 - t)


def _sigmoid_q(z: np.ndarray, p: ParamSet) -> np.ndarray:
    return 2 / (1 + np.exp(-z))


# --- extremal functions f, for the z f'/f cross-check ------------------------


def _janowski_f(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    if p.B == 0:
        return z * np.exp(p.A * t / p.n)
    return z * (1 + p.B * t) ** ((p.A - p.B) / (p.n * p.B))


def _bs_f(z: np.ndarray, p: ParamSet) -> np.ndarray:
    if p.alpha == 0:
        return z * np.exp(z)
    s = math.sqrt(p.alpha)
    return z * ((1 + s * z) / (1 - s * z)) ** (1 / (2 * s))


def _cardioid_f(z: np.ndarray, p: ParamSet) -> np.ndarray:
    return z * np.exp(4 * z / 3 + z * z / 3)


def _rational_f(z: np.ndarray, p: ParamSet) -> np.ndarray:
    k = RATIONAL_K
    return k * k * z / (k - z) ** 2 * np.exp(-z / k)


def _pe_f(z: np.ndarray, p: ParamSet) -> np.ndarray:
    return z * np.exp(np.exp(z) - 1)


def _g1_f(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    return z * ((1 + t) / (1 - t)) ** 2


def _g2_f(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    return z * (1 + t) / (1 - t) ** 2


def _g3_f(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    return z * (1 + t) ** 2 / (1 - t)


def _g4_f(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    return z * (1 + t) / (1 - t) ** (1 / p.n)


def _cs_f(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    exponent = (p.n + 2 - 2 * p.alpha) / p.n
    base = 1 - t if p.cs_reading is CsReading.POWER else 1 - z
    return z * (1 + t) / base**exponent


def _w_f(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    return z * (1 + t) / (1 - t)


def _m_beta_f(z: np.ndarray, p: ParamSet) -> np.ndarray:
    t = int_power(z, p.n)
    return z * (1 - t) ** (2 * (p.beta - 1) / p.n)


_REAL_AXIS_RIGHT = "real axis, z = +r"
_REAL_AXIS_LEFT = "real axis, z = -r"
_BOTH = "real axis, z = +r and z = -r"

CLASS_REGISTRY: MappingProxyType = MappingProxyType(
    {
        spec.id: spec
        for spec in (
            ClassSpec(
                ClassId.JANOWSKI, "Janowski S*_n[A,B]", RadiusKind.CLOSED_FORM,
                ("A", "B", "n"), _janowski_q,
                "z^n = r^n: right end when B < 0, left end when B > 0, both when B = 0",
                extremal_f=_janowski_f,
            ),
            ClassSpec(
                ClassId.STARLIKE_ALPHA, "starlike of order alpha S*(alpha)",
                RadiusKind.CLOSED_FORM, ("alpha",), _starlike_q, _REAL_AXIS_RIGHT,
                alpha_max=1.0,
            ),
            ClassSpec(
                ClassId.BS, "BS*(alpha)", RadiusKind.CLOSED_FORM, ("alpha",), _bs_q, _BOTH,
                extremal_f=_bs_f, alpha_max=1.0,
            ),
            ClassSpec(
                ClassId.LEMNISCATE_ALPHA, "S*_L(alpha)", RadiusKind.CLOSED_FORM, ("alpha",),
                _lemniscate_q, _REAL_AXIS_LEFT, alpha_max=LEMNISCATE_ALPHA_MAX,
            ),
            ClassSpec(
                ClassId.EXP_ALPHA, "S*_{alpha,e}", RadiusKind.CLOSED_FORM, ("alpha",),
                _exp_q, _REAL_AXIS_RIGHT, alpha_max=EXP_ALPHA_MAX,
            ),
            ClassSpec(
                ClassId.RL, "right lemniscate S*_RL", RadiusKind.CLOSED_FORM, (),
                _rl_q, _REAL_AXIS_LEFT,
            ),
            ClassSpec(
                ClassId.CARDIOID_C, "cardioid S*_C", RadiusKind.CLOSED_FORM, (),
                _cardioid_q, _REAL_AXIS_RIGHT, extremal_f=_cardioid_f,
            ),
            ClassSpec(
                ClassId.RATIONAL_R, "rational S*_R", RadiusKind.CLOSED_FORM, (),
                _rational_q, _REAL_AXIS_RIGHT, extremal_f=_rational_f,
            ),
            ClassSpec(
                ClassId.CRESCENT, "crescent", RadiusKind.CLOSED_FORM, (),
                _crescent_q, _REAL_AXIS_RIGHT,
            ),
            ClassSpec(
                ClassId.PE, "S*_p (1 + z e^z)", RadiusKind.ROOT_EQUATION, (),
                _pe_q, _REAL_AXIS_RIGHT, extremal_f=_pe_f,
            ),
            ClassSpec(
                ClassId.NEPHROID, "nephroid S*_Ne", RadiusKind.ROOT_EQUATION, (),
                _nephroid_q, "not attained on the real axis", sharpness=Sharpness.UNCLAIMED,
            ),
            ClassSpec(
                ClassId.SINE, "sine S*_S", RadiusKind.CLOSED_FORM, (),
                _sine_q, "not attained on the real axis", sharpness=Sharpness.UNCLAIMED,
            ),
            ClassSpec(
                ClassId.G1, "G1", RadiusKind.CLOSED_FORM, ("n",), _g1_q,
                "z^n = +-r^n (both ends)", extremal_f=_g1_f,
            ),
            ClassSpec(
                ClassId.G2, "G2", RadiusKind.CLOSED_FORM, ("n",), _g2_q,
                "z^n = r^n (right end)", extremal_f=_g2_f,
            ),
            ClassSpec(
                ClassId.G3, "G3", RadiusKind.CLOSED_FORM, ("n",), _g3_q,
                "z^n = -r^n (left end)", extremal_f=_g3_f,
            ),
            ClassSpec(
                ClassId.G4, "G4", RadiusKind.CLOSED_FORM, ("n",), _g4_q,
                "z^n = -r^n (left end); both ends when n = 1", extremal_f=_g4_f,
            ),
            ClassSpec(
                ClassId.CLOSE_TO_STARLIKE, "close-to-starlike CS*_n(alpha)",
                RadiusKind.CLOSED_FORM, ("alpha", "n"), _cs_q, "z^n = r^n (right end)",
                extremal_f=_cs_f, alpha_max=1.0,
            ),
            ClassSpec(
                ClassId.W_CLASS, "W_n", RadiusKind.CLOSED_FORM, ("n",), _w_q,
                "z^n = +-r^n (both ends)", extremal_f=_w_f,
            ),
            ClassSpec(
                ClassId.M_BETA, "M(beta)", RadiusKind.CLOSED_FORM, ("beta", "n"),
                _m_beta_q, "z^n = r^n (left end)", extremal_f=_m_beta_f,
                sharpness=Sharpness.AMBIGUOUS,
            ),
            ClassSpec(
                ClassId.CONVEXITY_ORDER, "convexity of order alpha C(alpha)",
                RadiusKind.ROOT_EQUATION, ("alpha",), _sigmoid_q,
                "minimum real part of 1 + z f''/f' at z = -r", alpha_max=1.0,
            ),
        )
    }
)


def get_class_spec(class_id: "ClassId | str") -> ClassSpec:
    """
    Look up a registry entry by id or CLI name.

    Raises:
        UnknownClassError: If the name is not registered.
    """
    try:
        return CLASS_REGISTRY[ClassId(class_id)]
    except ValueError as e:
        known = ", ".join(c.value for c in ClassId)
        raise UnknownClassError(f"Unknown class {class_id!r}; expected one of: {known}") from e


def validate_params(class_id: "ClassId | str", params: ParamSet) -> ParamSet:
    """
    Check the parameters a class reads against its domain.

    Returns:
        The same ParamSet, for chaining.

    Raises:
        DomainError: If a relevant parameter is outside its domain.
    """
    spec = get_class_spec(class_id)
    names = spec.param_names

    if "n" in names and not (isinstance(params.n, int) and 1 <= params.n <= MAX_N):
        raise DomainError(f"{spec.id.value}: n must be an integer in 1..{MAX_N}, got {params.n}")

    if spec.id is ClassId.JANOWSKI and not -1 <= params.B < params.A <= 1:
        raise DomainError(
            f"janowski: need -1 <= B < A <= 1, got A={params.A}, B={params.B}"
        )

    if "alpha" in names and not 0 <= params.alpha < spec.alpha_max:
        raise DomainError(
            f"{spec.id.value}: alpha must lie in [0, {spec.alpha_max:.6g}), got {params.alpha}"
        )

    if spec.id is ClassId.M_BETA and not params.beta > 1:
        raise DomainError(f"m-beta: beta must exceed 1, got {params.beta}")

    for name in names:
        value = getattr(params, name)
        if isinstance(value, float) and not math.isfinite(value):
            raise DomainError(f"{spec.id.value}: {name} must be finite")

    return params


def extremal_q(class_id: "ClassId | str", params: ParamSet, z: complex) -> complex:
    """
    Evaluate q(z) = z f'(z)/f(z) of the class's extremal function.

    Raises:
        DomainError: At a pole of q or for invalid parameters.
    """
    spec = get_class_spec(class_id)
    validate_params(spec.id, params)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        value = complex(spec.q(np.asarray(complex(z), dtype=np.complex128), params))
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise DomainError(f"{spec.id.value}: pole of q at z={z!r}")
    return value


def convexity_functional(z: complex) -> complex:
    """
    1 + z f0''(z)/f0'(z) for f0 with z f0'/f0 = 2/(1+e^{-z}).

    Equals s(z) + z e^{-z}/(1+e^{-z}) where s is the modified sigmoid.
    """
    return complex(convexity_functional_array(np.asarray(complex(z))))


def convexity_functional_array(z: np.ndarray) -> np.ndarray:
    w = np.exp(-np.asarray(z, dtype=np.complex128))
    return 2 / (1 + w) + z * w / (1 + w)
