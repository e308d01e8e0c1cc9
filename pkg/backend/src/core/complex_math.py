"""
Complex Math Module
Principal-branch elementary functions on double-precision complex values.

Scalar operations work on the built-in ``complex`` and never return NaN or
infinite parts; the ``*_array`` helpers apply the same branch conventions to
numpy arrays for the vectorised oracle paths.
"""

import cmath
import math

import numpy as np

from .exceptions import DomainError

ComplexValue = complex


def _as_complex(w: complex | float, op: str) -> complex:
    value = complex(w)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise DomainError(f"{op}: non-finite input {value!r}")
    # -0.0 imaginary parts would put negative reals on the lower lip of the cut
    return complex(value.real, value.imag + 0.0)


def _checked(value: complex, op: str) -> complex:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise DomainError(f"{op}: result is not finite")
    return value


def principal_log(w: complex | float) -> complex:
    """
    Principal logarithm ln|w| + i·Arg(w) with Arg in (-pi, pi].

    Raises:
        DomainError: If w is zero or not finite.
    """
    value = _as_complex(w, "principal_log")
    if value == 0:
        raise DomainError("principal_log: logarithm of zero")
    return cmath.log(value)


def principal_sqrt(w: complex | float) -> complex:
    """
    Square root with nonnegative real part.

    On the negative real axis the root with nonnegative imaginary part is
    returned.
    """
    return cmath.sqrt(_as_complex(w, "principal_sqrt"))


def cexp(z: complex | float) -> complex:
    value = _as_complex(z, "cexp")
    try:
        return _checked(cmath.exp(value), "cexp")
    except OverflowError as e:
        raise DomainError(f"cexp: overflow at {value!r}") from e


def csin(z: complex | float) -> complex:
    value = _as_complex(z, "csin")
    try:
        return _checked(cmath.sin(value), "csin")
    except OverflowError as e:
        raise DomainError(f"csin: overflow at {value!r}") from e


def csinh(z: complex | float) -> complex:
    value = _as_complex(z, "csinh")
    try:
        return _checked(cmath.sinh(value), "csinh")
    except OverflowError as e:
        raise DomainError(f"csinh: overflow at {value!r}") from e


def _positive_zero_imag(w: np.ndarray) -> np.ndarray:
    values = np.array(w, dtype=np.complex128)
    values.imag = values.imag + 0.0
    return values


def log_array(w: np.ndarray) -> np.ndarray:
    """Vectorised principal logarithm; zero maps to -inf, never raises."""
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.log(_positive_zero_imag(w))


def sqrt_array(w: np.ndarray) -> np.ndarray:
    """Vectorised principal square root (same branch as principal_sqrt)."""
    return np.sqrt(_positive_zero_imag(w))


def int_power(z: np.ndarray | complex, n: int) -> np.ndarray:
    """
    z**n by repeated squaring.

    Args:
        z: Complex scalar or array.
        n: Exponent, 1 <= n <= 64.

    Raises:
        DomainError: If n is outside the supported range.
    """
    if not 1 <= n <= 64:
        raise DomainError(f"exponent n={n} outside 1..64")
    base = np.asarray(z, dtype=np.complex128)
    result = np.ones_like(base)
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result
