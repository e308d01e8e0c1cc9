"""
Shared base for the sigmoid-radius management commands.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

import logging
from pathlib import Path
from typing import Any

from django.core.management.base import BaseCommand, CommandError, CommandParser

from src.config.oracle import OracleSettings, get_oracle_settings, with_samples
from src.core.exceptions import RadiusError

from ...catalog import ClassId, CsReading, ParamSet, validate_params

logger = logging.getLogger(__name__)

CLASS_CHOICES = [class_id.value for class_id in ClassId]
USAGE_ERROR = 2
VERIFICATION_FAILURE = 1


class SigmoidCommand(BaseCommand):
    """Common flags, error translation and output handling."""

    requires_system_checks: list[str] = []
    formats: tuple[str, ...] = ("json", "csv", "text")
    default_format = "json"

    def add_param_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--alpha", type=float, help="Order alpha.")
        parser.add_argument("--beta", type=float, help="Bound beta > 1 for m-beta.")
        parser.add_argument("-A", dest="A", type=float, help="Janowski A.")
        parser.add_argument("-B", dest="B", type=float, help="Janowski B.")
        parser.add_argument("-n", dest="n", type=int, help="Order n of the function space.")
        parser.add_argument(
            "--cs-reading",
            choices=[reading.value for reading in CsReading],
            help="Denominator of the close-to-starlike extremal for n > 1.",
        )

    def add_output_arguments(self, parser: CommandParser) -> None:
        parser.add_argument(
            "--format",
            choices=self.formats,
            default=self.default_format,
            help=f"Output format (default {self.default_format}).",
        )
        parser.add_argument("--out", help="Write output to this file instead of stdout.")

    def params_from_options(self, options: dict[str, Any]) -> ParamSet:
        reading = options.get("cs_reading")
        return ParamSet().with_updates(
            A=options.get("A"),
            B=options.get("B"),
            alpha=options.get("alpha"),
            beta=options.get("beta"),
            n=options.get("n"),
            cs_reading=CsReading(reading) if reading else None,
        )

    def validated_params(self, class_id: ClassId, options: dict[str, Any]) -> ParamSet:
        return validate_params(class_id, self.params_from_options(options))

    def oracle_settings(self, samples: int | None = None) -> OracleSettings:
        settings = get_oracle_settings()
        if samples is not None:
            settings = with_samples(settings, samples)
        return settings

    def write_output(self, text: str, options: dict[str, Any]) -> None:
        out = options.get("out")
        if out:
            Path(out).write_text(text, encoding="utf-8")
            logger.info(f"Wrote {len(text)} bytes to {out}")
        else:
            self.stdout.write(text, ending="")

    def handle(self, *args: Any, **options: Any) -> None:
        try:
            self.run(**options)
        except RadiusError as e:
            raise CommandError(e.detail, returncode=USAGE_ERROR) from e
        except OSError as e:
            raise CommandError(f"Cannot write output: {e}", returncode=USAGE_ERROR) from e

    def run(self, **options: Any) -> None:
        raise NotImplementedError
