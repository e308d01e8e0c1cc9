"""
Renderers
Deterministic JSON output with every float written at 17 significant digits.
"""

import json
import math
from collections.abc import Mapping, Sequence
from typing import Any

from rest_framework.renderers import BaseRenderer


def format_float(value: float) -> str:
    """Format a float as a JSON number with 17 significant digits."""
    if math.isnan(value):
        return "NaN"
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    return format(value, ".17g")


def dumps_17g(data: Any, indent: int | None = None, _level: int = 0) -> str:
    """
    Serialize plain data (dicts, lists, str, numbers, bool, None) to JSON.

    Unlike ``json.dumps`` floats are written with 17 significant digits, so
    identical inputs always give byte-identical text.
    """
    if data is None or isinstance(data, bool):
        return json.dumps(data)
    if isinstance(data, int):
        return str(data)
    if isinstance(data, float):
        return format_float(data)
    if isinstance(data, str):
        return json.dumps(data)

    if isinstance(data, Mapping):
        items = [
            f"{json.dumps(str(key))}: {dumps_17g(value, indent, _level + 1)}"
            for key, value in data.items()
        ]
        return _wrap("{", "}", items, indent, _level)
    if isinstance(data, Sequence):
        items = [dumps_17g(value, indent, _level + 1) for value in data]
        return _wrap("[", "]", items, indent, _level)

    raise TypeError(f"Cannot serialize {type(data).__name__} to JSON")


def _wrap(opening: str, closing: str, items: list[str], indent: int | None, level: int) -> str:
    if not items:
        return opening + closing
    if indent is None:
        return opening + ", ".join(items) + closing
    inner = " " * (indent * (level + 1))
    outer = " " * (indent * level)
    body = ",\n".join(inner + item for item in items)
    return f"{opening}\n{body}\n{outer}{closing}"


class SeventeenDigitJSONRenderer(BaseRenderer):
    """DRF renderer sharing the CLI's float formatting."""

    media_type = "application/json"
    format = "json"
    charset = "utf-8"

    def render(self, data, accepted_media_type=None, renderer_context=None) -> bytes:
        if data is None:
            return b""
        return dumps_17g(data).encode(self.charset)
