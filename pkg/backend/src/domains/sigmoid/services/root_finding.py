"""
Root Finding Service
Bracketed bisection with secant acceleration, shared by every
root-equation radius and by the tests.
"""

import logging
import math
from collections.abc import Callable

from src.core.exceptions import BracketError, ConvergenceError

logger = logging.getLogger(__name__)


def solve_bracketed(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    xtol: float = 1e-14,
    ftol: float = 1e-12,
    max_iter: int = 200,
) -> float:
    """
    Find a root of ``fn`` on [lo, hi].

    Each step tries the secant point of the current bracket. The step falls
    back to bisection when that point leaves the bracket or when the bracket
    has not halved over the last two steps, so convergence is never slower
    than plain bisection by more than a constant factor.

    Args:
        fn: Continuous real function.
        lo: Left end of the bracket.
        hi: Right end of the bracket.
        xtol: Required final bracket width.
        ftol: Required residual |fn(root)|.
        max_iter: Iteration budget.

    Returns:
        Root with bracket width <= xtol and |fn(root)| <= ftol.

    Raises:
        BracketError: If fn(lo) and fn(hi) do not differ in sign.
        ConvergenceError: If the budget runs out first.
    """
    lo, hi = min(lo, hi), max(lo, hi)
    flo, fhi = fn(lo), fn(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if math.copysign(1, flo) == math.copysign(1, fhi):
        raise BracketError(
            f"No sign change on [{lo}, {hi}]: f(lo)={flo:.3e}, f(hi)={fhi:.3e}"
        )

    widths = [hi - lo, hi - lo]
    force_bisection = False

    for iteration in range(1, max_iter + 1):
        width = hi - lo
        x = lo + width / 2
        if not force_bisection and fhi != flo:
            secant = hi - fhi * width / (fhi - flo)
            if lo < secant < hi:
                x = secant

        if x <= lo or x >= hi:
            # Bracket is down to adjacent doubles
            best = lo if abs(flo) <= abs(fhi) else hi
            if min(abs(flo), abs(fhi)) <= ftol:
                return best
            raise ConvergenceError(f"Bracket collapsed at {best!r} with residual above {ftol}")

        fx = fn(x)
        if fx == 0:
            return x
        if math.copysign(1, fx) == math.copysign(1, flo):
            lo, flo = x, fx
        else:
            hi, fhi = x, fx

        widths.append(hi - lo)
        force_bisection = widths[-1] > widths[-3] / 2

        if hi - lo <= xtol:
            best, residual = (lo, abs(flo)) if abs(flo) <= abs(fhi) else (hi, abs(fhi))
            if residual <= ftol:
                logger.debug(f"solve_bracketed converged in {iteration} steps: {best!r}")
                return best

    raise ConvergenceError(f"No root within {max_iter} iterations on [{lo}, {hi}]")
