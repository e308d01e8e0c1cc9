"""
Sigmoid Domain Module
The image of the unit disk under the modified sigmoid 2/(1+e^{-z}):
membership, the centred-disk containment lemma and boundary traces.
"""

import math
from dataclasses import dataclass

import numpy as np

from src.core.complex_math import cexp, log_array, principal_log
from src.core.exceptions import DomainError

E = math.e

# Real-axis endpoints of the domain: sigmoid(-1) and sigmoid(1)
LOWER_ENDPOINT = 2 / (1 + E)
UPPER_ENDPOINT = 2 * E / (1 + E)

# Radius of the largest disk centred at 1 inside the domain
CENTRAL_RADIUS = (E - 1) / (E + 1)

# |log(w/(2-w))| within this band of 1 counts as on the boundary
BOUNDARY_BAND = 1e-12


@dataclass(frozen=True)
class Disk:
    """Disk with a real center."""

    center: float
    radius: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.center) and math.isfinite(self.radius)):
            raise DomainError("Disk center and radius must be finite")
        if self.radius < 0:
            raise DomainError(f"Disk radius must be nonnegative, got {self.radius}")


@dataclass(frozen=True)
class BoundaryTrace:
    """Closed or open sampled curve; angles[k] is the parameter of points[k]."""

    points: tuple[complex, ...]
    angles: tuple[float, ...]
    closed: bool = True

    def __post_init__(self) -> None:
        if len(self.points) < 3:
            raise DomainError("A trace needs at least 3 points")
        if len(self.angles) != len(self.points):
            raise DomainError("Trace angles and points differ in length")
        for previous, current in zip(self.points, self.points[1:]):
            if previous == current:
                raise DomainError("Consecutive trace points must be distinct")

    def __len__(self) -> int:
        return len(self.points)


def sigmoid(z: complex | float) -> complex:
    """
    Modified sigmoid 2/(1+e^{-z}).

    Raises:
        DomainError: At the poles e^{-z} = -1.
    """
    denominator = 1 + cexp(-complex(z))
    if denominator == 0:
        raise DomainError(f"sigmoid: pole at {z!r}")
    return 2 / denominator


def sg_modulus(w: complex | float) -> float:
    """|log(w/(2-w))|; +inf for w in {0, 2}."""
    value = complex(w)
    if value == 0 or value == 2:
        return math.inf
    return abs(principal_log(value / (2 - value)))


def sg_modulus_array(w: np.ndarray) -> np.ndarray:
    """
    Vectorised |log(w/(2-w))|.

    Non-finite inputs and the points 0 and 2 map to +inf, so the result can
    be compared against 1 without further checks.
    """
    values = np.asarray(w, dtype=np.complex128)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        modulus = np.abs(log_array(values / (2 - values)))
    return np.where(np.isfinite(modulus), modulus, np.inf)


def sg_contains(w: complex | float) -> bool:
    """True iff w lies in the open domain |log(w/(2-w))| < 1."""
    return sg_modulus(w) < 1 - BOUNDARY_BAND


def lemma_radius(a: float) -> float:
    """
    Radius (e-1)/(e+1) - |a-1| of the largest disk centred at a inside the domain.

    Raises:
        DomainError: If a is outside (2/(1+e), 2e/(1+e)).
    """
    if not LOWER_ENDPOINT < a < UPPER_ENDPOINT:
        raise DomainError(
            f"Center {a} outside ({LOWER_ENDPOINT:.6f}, {UPPER_ENDPOINT:.6f})"
        )
    return CENTRAL_RADIUS - abs(a - 1)


def disk_in_sg(disk: Disk) -> bool:
    """Containment of a real-centred disk via the lemma; False outside the interval."""
    if not LOWER_ENDPOINT < disk.center < UPPER_ENDPOINT:
        return False
    return disk.radius <= lemma_radius(disk.center)


def sg_boundary(samples: int) -> BoundaryTrace:
    """
    Sample the boundary as the image of the unit circle, t = 2*pi*k/samples.

    Args:
        samples: Number of points, at least 3.

    Returns:
        Closed BoundaryTrace starting at 2e/(1+e).
    """
    if samples < 3:
        raise DomainError(f"samples must be >= 3, got {samples}")
    angles = 2 * np.pi * np.arange(samples) / samples
    points = 2 / (1 + np.exp(-np.exp(1j * angles)))
    return BoundaryTrace(
        points=tuple(complex(p) for p in points),
        angles=tuple(float(t) for t in angles),
        closed=True,
    )
