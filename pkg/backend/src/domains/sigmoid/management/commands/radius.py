from typing import Any

from django.core.management.base import CommandParser

from ...catalog import ClassId
from ...emitters import radius_csv, radius_json, radius_text
from ...services.radius_service import compute_radius
from ._base import CLASS_CHOICES, SigmoidCommand

RENDERERS = {"json": radius_json, "csv": radius_csv, "text": radius_text}


class Command(SigmoidCommand):
    help = "Compute the sigmoid-starlikeness radius of a function class."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("class_name", choices=CLASS_CHOICES, metavar="class")
        self.add_param_arguments(parser)
        self.add_output_arguments(parser)

    def run(self, **options: Any) -> None:
        class_id = ClassId(options["class_name"])
        params = self.validated_params(class_id, options)
        result = compute_radius(class_id, params)
        self.write_output(RENDERERS[options["format"]](result), options)
