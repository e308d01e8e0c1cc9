"""Helpers shared by the oracle and catalog tests."""

import math

from src.domains.sigmoid.catalog import ClassId, ParamSet


def circular_distance(a: float, b: float) -> float:
    difference = (a - b) % (2 * math.pi)
    return min(difference, 2 * math.pi - difference)


REPRESENTATIVE_PARAMS = [
    (ClassId.JANOWSKI, ParamSet(A=1.0, B=-1.0)),
    (ClassId.JANOWSKI, ParamSet(A=0.5, B=0.25, n=2)),
    (ClassId.STARLIKE_ALPHA, ParamSet(alpha=0.5)),
    (ClassId.BS, ParamSet(alpha=0.5)),
    (ClassId.LEMNISCATE_ALPHA, ParamSet(alpha=0.25)),
    (ClassId.EXP_ALPHA, ParamSet(alpha=0.25)),
    (ClassId.RL, ParamSet()),
    (ClassId.CARDIOID_C, ParamSet()),
    (ClassId.RATIONAL_R, ParamSet()),
    (ClassId.CRESCENT, ParamSet()),
    (ClassId.PE, ParamSet()),
    (ClassId.NEPHROID, ParamSet()),
    (ClassId.SINE, ParamSet()),
    (ClassId.G1, ParamSet(n=2)),
    (ClassId.G2, ParamSet(n=2)),
    (ClassId.G3, ParamSet(n=3)),
    (ClassId.G4, ParamSet(n=2)),
    (ClassId.CLOSE_TO_STARLIKE, ParamSet(alpha=0.25, n=1)),
    (ClassId.W_CLASS, ParamSet(n=3)),
    (ClassId.M_BETA, ParamSet(beta=2.0, n=2)),
    (ClassId.CONVEXITY_ORDER, ParamSet(alpha=0.5)),
]
