from typing import Any

from django.core.management.base import CommandParser

from ...emitters import table_csv, table_json, table_text
from ...services.table_service import constants_table
from ._base import SigmoidCommand

RENDERERS = {"text": table_text, "csv": table_csv, "json": table_json}


class Command(SigmoidCommand):
    help = "Print the quoted radius constants and derived grid values."

    default_format = "text"

    def add_arguments(self, parser: CommandParser) -> None:
        self.add_output_arguments(parser)

    def run(self, **options: Any) -> None:
        self.write_output(RENDERERS[options["format"]](constants_table()), options)
