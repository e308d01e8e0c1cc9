from typing import Any

from django.core.management.base import CommandParser

from ...catalog import ClassId
from ...domain import sg_boundary
from ...emitters import boundary_csv, boundary_svg
from ...services.oracle_service import circle_image
from ._base import CLASS_CHOICES, SigmoidCommand

RENDERERS = {"csv": boundary_csv, "svg": boundary_svg}


class Command(SigmoidCommand):
    help = "Emit the domain boundary and the image of |z| = r under the extremal q."

    formats = ("csv", "svg")
    default_format = "csv"

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("class_name", choices=CLASS_CHOICES, metavar="class")
        parser.add_argument(
            "--r", dest="r", type=float, required=True, help="Circle radius in (0, 1)."
        )
        parser.add_argument("--samples", type=int, help="Points per curve, at least 3.")
        self.add_param_arguments(parser)
        self.add_output_arguments(parser)

    def run(self, **options: Any) -> None:
        class_id = ClassId(options["class_name"])
        params = self.validated_params(class_id, options)
        samples = options.get("samples")
        if samples is None:
            samples = self.oracle_settings().boundary_samples

        domain_trace = sg_boundary(samples)
        image_trace = circle_image(class_id, params, options["r"], samples)
        self.write_output(RENDERERS[options["format"]](domain_trace, image_trace), options)
