"""
Constants Table Service
The quoted radius constants followed by derived grid values, in a fixed order
for regression diffing.
"""

from typing import NamedTuple

from ..catalog import ClassId, ParamSet
from .radius_service import compute_radius

# Values as quoted to six digits in the literature
QUOTED_CONSTANTS: tuple[tuple[str, ClassId, ParamSet, float], ...] = (
    ("rl", ClassId.RL, ParamSet(), 0.738309),
    ("cardioid", ClassId.CARDIOID_C, ParamSet(), 0.301221),
    ("rational", ClassId.RATIONAL_R, ParamSet(), 0.645131),
    ("crescent", ClassId.CRESCENT, ParamSet(), 0.389089),
    ("pe", ClassId.PE, ParamSet(), 0.331672),
    ("nephroid", ClassId.NEPHROID, ParamSet(), 0.43473),
    ("sine", ClassId.SINE, ParamSet(), 0.447074),
    ("convexity(0)", ClassId.CONVEXITY_ORDER, ParamSet(alpha=0.0), 0.852606),
)

DERIVED_CONSTANTS: tuple[tuple[str, ClassId, ParamSet], ...] = (
    ("janowski(1,-1)", ClassId.JANOWSKI, ParamSet(A=1.0, B=-1.0)),
    ("starlike-alpha(0.5)", ClassId.STARLIKE_ALPHA, ParamSet(alpha=0.5)),
    ("bs(0)", ClassId.BS, ParamSet(alpha=0.0)),
    ("lemniscate-alpha(0)", ClassId.LEMNISCATE_ALPHA, ParamSet(alpha=0.0)),
    ("exp-alpha(0)", ClassId.EXP_ALPHA, ParamSet(alpha=0.0)),
    ("g1(1)", ClassId.G1, ParamSet(n=1)),
    ("g2(1)", ClassId.G2, ParamSet(n=1)),
    ("g3(1)", ClassId.G3, ParamSet(n=1)),
    ("g4(1)", ClassId.G4, ParamSet(n=1)),
    ("w(1)", ClassId.W_CLASS, ParamSet(n=1)),
    ("close-to-starlike(0,1)", ClassId.CLOSE_TO_STARLIKE, ParamSet(alpha=0.0, n=1)),
    ("m-beta(2)", ClassId.M_BETA, ParamSet(beta=2.0, n=1)),
    ("convexity(0.25)", ClassId.CONVEXITY_ORDER, ParamSet(alpha=0.25)),
    ("convexity(0.5)", ClassId.CONVEXITY_ORDER, ParamSet(alpha=0.5)),
    ("convexity(0.75)", ClassId.CONVEXITY_ORDER, ParamSet(alpha=0.75)),
)


class ConstantRow(NamedTuple):
    name: str
    value: float
    quoted: float | None


def constants_table() -> list[ConstantRow]:
    """Quoted constants first, then the derived rows."""
    rows = [
        ConstantRow(name, compute_radius(class_id, params).value, quoted)
        for name, class_id, params, quoted in QUOTED_CONSTANTS
    ]
    rows.extend(
        ConstantRow(name, compute_radius(class_id, params).value, None)
        for name, class_id, params in DERIVED_CONSTANTS
    )
    return rows
