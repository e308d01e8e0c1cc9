"""
Verification Orchestrator
Expands the default parameter grid and runs the sharpness oracle over it,
fanning classes out over a thread pool.
"""

import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple

from src.config.oracle import OracleSettings, get_oracle_settings

from ..catalog import (
    CLASS_REGISTRY,
    ClassId,
    ParamSet,
    validate_params,
)
from .oracle_service import OracleReport, oracle_radius

logger = logging.getLogger(__name__)

GRID_ALPHA_FRACTIONS = (0.0, 0.25, 0.5)
GRID_ALPHA_TOP_FRACTION = 0.75
GRID_BETAS = (1.25, 2.0, 5.0)
GRID_JANOWSKI = ((1.0, -1.0), (1.0, 0.0), (0.5, -0.5), (0.5, 0.25))
GRID_NS = (1, 2, 3)


class GridEntry(NamedTuple):
    class_id: ClassId
    params: ParamSet


def grid_alphas(class_id: ClassId) -> tuple[float, ...]:
    """Alpha values {0, 0.25, 0.5, 0.75 * max} for a class with an alpha parameter."""
    top = GRID_ALPHA_TOP_FRACTION * CLASS_REGISTRY[class_id].alpha_max
    return (*GRID_ALPHA_FRACTIONS, top)


def class_grid(class_id: ClassId) -> list[GridEntry]:
    """Default grid points for one class."""
    if class_id is ClassId.JANOWSKI:
        return [
            GridEntry(class_id, ParamSet(A=a, B=b, n=n))
            for a, b in GRID_JANOWSKI
            for n in GRID_NS
        ]
    if class_id is ClassId.CLOSE_TO_STARLIKE:
        return [
            GridEntry(class_id, ParamSet(alpha=alpha, n=n))
            for alpha in grid_alphas(class_id)
            for n in GRID_NS
        ]
    if CLASS_REGISTRY[class_id].alpha_max is not None:
        return [GridEntry(class_id, ParamSet(alpha=alpha)) for alpha in grid_alphas(class_id)]
    if class_id is ClassId.M_BETA:
        return [
            GridEntry(class_id, ParamSet(beta=beta, n=n)) for beta in GRID_BETAS for n in GRID_NS
        ]
    if "n" in CLASS_REGISTRY[class_id].param_names:
        return [GridEntry(class_id, ParamSet(n=n)) for n in GRID_NS]
    return [GridEntry(class_id, ParamSet())]


def default_grid(classes: Iterable[ClassId] | None = None) -> list[GridEntry]:
    """Grid entries in registry order."""
    selected = list(classes) if classes is not None else list(ClassId)
    entries = [entry for class_id in selected for entry in class_grid(class_id)]
    for entry in entries:
        validate_params(entry.class_id, entry.params)
    return entries


class VerificationOrchestrator:
    """
    Runs the sharpness oracle over a list of grid entries.

    Reports come back in input order; each entry is independent, so the
    work is mapped over a thread pool.
    """

    def __init__(self, settings: OracleSettings | None = None, workers: int | None = None) -> None:
        """
        Initialize the orchestrator.

        Args:
            settings: Oracle settings. Falls back to the cached ones.
            workers: Thread count. Falls back to settings.workers.
        """
        self.settings = settings or get_oracle_settings()
        self.workers = workers or self.settings.workers

    def run(self, entries: Sequence[GridEntry]) -> list[OracleReport]:
        """
        Verify every entry.

        Args:
            entries: Class and parameter pairs to check.

        Returns:
            One OracleReport per entry, in the same order.
        """
        logger.info(f"Stage 1: verifying {len(entries)} entries on {self.workers} workers")

        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            reports = list(pool.map(self._verify, entries))

        failures = [report for report in reports if report.failed]
        logger.info(
            f"Stage 2: verification finished, {len(reports) - len(failures)} ok, "
            f"{len(failures)} failed"
        )
        return reports

    def run_grid(self, classes: Iterable[ClassId] | None = None) -> list[OracleReport]:
        return self.run(default_grid(classes))

    def _verify(self, entry: GridEntry) -> OracleReport:
        return oracle_radius(entry.class_id, entry.params, self.settings)
