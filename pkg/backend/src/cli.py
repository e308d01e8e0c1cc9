"""
Console entry point: ``sg-radius <command> [options]``.

Dispatches to the Django management commands (radius, verify, boundary, table).
"""

import os
import sys


def main(argv: list[str] | None = None) -> None:
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "src.config.settings.local")
    from django.core.management import execute_from_command_line

    execute_from_command_line(["sg-radius", *(sys.argv[1:] if argv is None else argv)])


if __name__ == "__main__":
    main()
