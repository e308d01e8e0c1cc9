"""
Sigmoid Domain Emitters
Text, CSV, JSON and SVG renderings of radius results, oracle reports,
boundary traces and the constants table. Output is byte-deterministic.
"""

import csv
import io
from collections.abc import Iterable, Mapping, Sequence
from typing import Any

from src.core.renderers import dumps_17g, format_float

from .domain import BoundaryTrace
from .serializers import ConstantRowSerializer, OracleReportSerializer, RadiusResultSerializer
from .services.oracle_service import OracleReport
from .services.radius_service import RadiusResult
from .services.table_service import ConstantRow

SVG_VIEWBOX = "0.4 -0.6 1.2 1.2"
SVG_STYLE = (
    ".boundary{fill:none;stroke:#1f2937;stroke-width:0.004}"
    ".image{fill:none;stroke:#b91c1c;stroke-width:0.004;stroke-dasharray:0.02 0.01}"
)


def format_params(params: Mapping[str, Any]) -> str:
    """Compact "A=1,B=-1,n=1" form; "-" when the class has no parameters."""
    if not params:
        return "-"
    return ",".join(
        f"{name}={value:g}" if isinstance(value, float) else f"{name}={value}"
        for name, value in params.items()
    )


def _fixed(value: float | None) -> str:
    return "-" if value is None else f"{value:.6f}"


def _csv_text(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _text_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [
        max(len(header[i]), *(len(row[i]) for row in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        for line in (header, *rows)
    ]
    return "\n".join(lines) + "\n"


# --- radius ----------------------------------------------------------------

RADIUS_HEADER = ("class", "params", "value", "method", "residual")


def radius_json(result: RadiusResult) -> str:
    return dumps_17g(RadiusResultSerializer(result).data) + "\n"


def radius_text(result: RadiusResult) -> str:
    row = (
        result.class_id.value,
        format_params(result.relevant_params),
        _fixed(result.value),
        result.method.value,
        f"{result.residual:.1e}",
    )
    return _text_table(RADIUS_HEADER, [row])


def radius_csv(result: RadiusResult) -> str:
    row = (
        result.class_id.value,
        format_params(result.relevant_params),
        format_float(result.value),
        result.method.value,
        format_float(result.residual),
    )
    return _csv_text(RADIUS_HEADER, [row])


# --- verify ----------------------------------------------------------------

VERIFY_HEADER = ("class", "params", "formula", "oracle", "gap", "status")


def reports_json(reports: Sequence[OracleReport]) -> str:
    return dumps_17g(OracleReportSerializer(reports, many=True).data, indent=2) + "\n"


def reports_text(reports: Sequence[OracleReport]) -> str:
    rows = [
        (
            report.class_id.value,
            format_params(report.relevant_params),
            _fixed(report.formula_radius),
            _fixed(report.oracle_radius),
            f"{report.abs_gap:.1e}",
            report.status.value,
        )
        for report in reports
    ]
    text = _text_table(VERIFY_HEADER, rows)
    notes = [
        f"  {report.class_id.value} {format_params(report.relevant_params)}: {note}"
        for report in reports
        for note in report.notes
    ]
    if notes:
        text += "notes:\n" + "\n".join(notes) + "\n"
    return text


def reports_csv(reports: Sequence[OracleReport]) -> str:
    rows = [
        (
            report.class_id.value,
            format_params(report.relevant_params),
            format_float(report.formula_radius),
            format_float(report.oracle_radius),
            format_float(report.abs_gap),
            report.status.value,
        )
        for report in reports
    ]
    return _csv_text(VERIFY_HEADER, rows)


# --- boundary --------------------------------------------------------------


def boundary_csv(domain_trace: BoundaryTrace, image_trace: BoundaryTrace) -> str:
    """Rows curve,t,re,im for the domain boundary then the image curve."""
    rows = [
        (curve, format_float(t), format_float(w.real), format_float(w.imag))
        for curve, trace in (("boundary", domain_trace), ("image", image_trace))
        for t, w in zip(trace.angles, trace.points)
    ]
    return _csv_text(("curve", "t", "re", "im"), rows)


def _polyline(trace: BoundaryTrace, css_class: str) -> str:
    points = list(trace.points)
    if trace.closed:
        points.append(points[0])
    coordinates = " ".join(f"{format_float(w.real)},{format_float(-w.imag)}" for w in points)
    return f'<polyline class="{css_class}" points="{coordinates}"/>'


def boundary_svg(domain_trace: BoundaryTrace, image_trace: BoundaryTrace) -> str:
    """Self-contained SVG: domain boundary solid, image curve dashed."""
    return "\n".join(
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{SVG_VIEWBOX}" '
            'width="600" height="600">',
            f"<style>{SVG_STYLE}</style>",
            _polyline(domain_trace, "boundary"),
            _polyline(image_trace, "image"),
            "</svg>",
        )
    ) + "\n"


# --- table -----------------------------------------------------------------

TABLE_HEADER = ("name", "value", "quoted")


def table_text(rows: Sequence[ConstantRow]) -> str:
    return _text_table(
        TABLE_HEADER, [(row.name, _fixed(row.value), _fixed(row.quoted)) for row in rows]
    )


def table_csv(rows: Sequence[ConstantRow]) -> str:
    return _csv_text(
        TABLE_HEADER,
        [
            (
                row.name,
                format_float(row.value),
                "" if row.quoted is None else format_float(row.quoted),
            )
            for row in rows
        ],
    )


def table_json(rows: Sequence[ConstantRow]) -> str:
    return dumps_17g(ConstantRowSerializer(rows, many=True).data, indent=2) + "\n"
