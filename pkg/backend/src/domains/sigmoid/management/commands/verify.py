import logging
from typing import Any

from django.core.management.base import CommandError, CommandParser

from ...catalog import ClassId
from ...emitters import reports_csv, reports_json, reports_text
from ...services.verification import GridEntry, VerificationOrchestrator, default_grid
from ._base import CLASS_CHOICES, VERIFICATION_FAILURE, SigmoidCommand

logger = logging.getLogger(__name__)

RENDERERS = {"json": reports_json, "csv": reports_csv, "text": reports_text}


class Command(SigmoidCommand):
    help = "Check radius formulas against the numerical sharpness oracle."

    default_format = "text"

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("class_name", choices=[*CLASS_CHOICES, "all"], metavar="class")
        parser.add_argument(
            "--grid",
            action="store_true",
            help="Use the default parameter grid instead of the given flags.",
        )
        parser.add_argument("--samples", type=int, help="Initial samples per circle (>= 64).")
        parser.add_argument("--workers", type=int, help="Threads for the sweep.")
        self.add_param_arguments(parser)
        self.add_output_arguments(parser)

    def run(self, **options: Any) -> None:
        name = options["class_name"]
        classes = list(ClassId) if name == "all" else [ClassId(name)]

        if options["grid"]:
            entries = default_grid(classes)
        else:
            entries = [
                GridEntry(class_id, self.validated_params(class_id, options))
                for class_id in classes
            ]

        orchestrator = VerificationOrchestrator(
            settings=self.oracle_settings(options.get("samples")),
            workers=options.get("workers"),
        )
        reports = orchestrator.run(entries)
        self.write_output(RENDERERS[options["format"]](reports), options)

        failed = [report for report in reports if report.failed]
        if failed:
            names = ", ".join(report.class_id.value for report in failed)
            raise CommandError(
                f"{len(failed)} verification row(s) failed: {names}",
                returncode=VERIFICATION_FAILURE,
            )
