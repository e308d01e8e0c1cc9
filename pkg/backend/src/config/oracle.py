"""
Oracle Configuration
Loads the numerical defaults bundled with the package (defaults/oracle.yaml)
and applies environment overrides.
"""

import logging
import os
from functools import lru_cache
from importlib.resources import files
from pathlib import Path

import yaml
from pydantic import BaseModel, Field, ValidationError, model_validator

from src.core.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = files("src.config") / "defaults" / "oracle.yaml"


class OracleSettings(BaseModel):
    """Validated numerical settings for the sharpness oracle and sweeps."""

    samples: int = Field(4096, ge=64)
    max_samples: int = Field(65536, ge=64)
    refine_tolerance: float = Field(1e-11, gt=0)
    angle_tolerance: float = Field(1e-10, gt=0)
    radius_tolerance: float = Field(1e-9, gt=0)
    bracket_floor: float = Field(1e-6, gt=0, lt=1)
    bracket_ceiling: float = Field(0.999, gt=0, lt=1)
    bracket_growth: float = Field(1.5, gt=1)
    gap_tolerance: float = Field(1e-6, gt=0)
    boundary_samples: int = Field(720, ge=3)
    workers: int = Field(4, ge=1)

    model_config = {"frozen": True, "extra": "forbid"}

    @model_validator(mode="after")
    def _check_ranges(self) -> "OracleSettings":
        if self.max_samples < self.samples:
            raise ValueError("max_samples must be at least samples")
        if self.bracket_floor >= self.bracket_ceiling:
            raise ValueError("bracket_floor must be below bracket_ceiling")
        return self


def load_oracle_settings(path: str | Path | None = None) -> OracleSettings:
    """
    Read oracle settings from YAML and the environment.

    Args:
        path: YAML file. Falls back to SG_RADIUS_CONFIG, then the packaged default.

    Returns:
        Validated OracleSettings.

    Raises:
        ConfigurationError: If the file is unreadable or a value is invalid.
    """
    override = path or os.getenv("SG_RADIUS_CONFIG")
    config_path = Path(override) if override else DEFAULT_CONFIG

    try:
        raw = yaml.safe_load(config_path.read_text(encoding="utf-8")) or {}
    except (OSError, yaml.YAMLError) as e:
        raise ConfigurationError(f"Cannot read oracle config {config_path}: {e}") from e

    if not isinstance(raw, dict):
        raise ConfigurationError(f"Oracle config {config_path} must be a mapping")

    samples_override = os.getenv("SG_RADIUS_SAMPLES")
    if samples_override:
        try:
            raw["samples"] = int(samples_override)
        except ValueError as e:
            raise ConfigurationError(
                f"SG_RADIUS_SAMPLES must be an integer, got {samples_override!r}"
            ) from e
        raw["max_samples"] = max(int(raw.get("max_samples", 65536)), raw["samples"])

    try:
        settings = OracleSettings(**raw)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid oracle config {config_path}: {e}") from e

    logger.debug(f"Loaded oracle settings from {config_path}: samples={settings.samples}")
    return settings


@lru_cache(maxsize=1)
def get_oracle_settings() -> OracleSettings:
    """Process-wide cached settings (see load_oracle_settings)."""
    return load_oracle_settings()


def with_samples(settings: OracleSettings, samples: int) -> OracleSettings:
    """
    Copy of ``settings`` with a different initial sample count.

    Raises:
        ConfigurationError: If the sample count is below the minimum.
    """
    values = settings.model_dump()
    values["samples"] = samples
    values["max_samples"] = max(settings.max_samples, samples)
    try:
        return OracleSettings(**values)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid sample count {samples}: {e}") from e
