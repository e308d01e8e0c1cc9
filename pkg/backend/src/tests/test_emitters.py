import json

from src.domains.sigmoid.catalog import ClassId, ParamSet
from src.domains.sigmoid.domain import BoundaryTrace
from src.domains.sigmoid.emitters import (
    boundary_csv,
    boundary_svg,
    format_params,
    radius_csv,
    radius_json,
    radius_text,
    reports_csv,
    reports_json,
    reports_text,
    table_csv,
    table_json,
    table_text,
)
from src.domains.sigmoid.services.oracle_service import OracleReport, VerificationStatus
from src.domains.sigmoid.services.radius_service import RadiusMethod, RadiusResult
from src.domains.sigmoid.services.table_service import ConstantRow

RESULT = RadiusResult(
    ClassId.JANOWSKI, ParamSet(A=1.0, B=-1.0, n=1), 0.25, RadiusMethod.CLOSED_FORM
)

REPORTS = [
    OracleReport(
        class_id=ClassId.RL,
        params=ParamSet(),
        oracle_radius=0.5,
        formula_radius=0.5,
        abs_gap=0.0,
        touch_angle=3.0,
        max_modulus_at_formula_radius=1.0,
    ),
    OracleReport(
        class_id=ClassId.M_BETA,
        params=ParamSet(beta=2.0),
        oracle_radius=0.125,
        formula_radius=0.25,
        abs_gap=0.125,
        touch_angle=0.0,
        max_modulus_at_formula_radius=1.5,
        status=VerificationStatus.FLAGGED,
        notes=("literal formula 0.250000",),
    ),
]

TRIANGLE = BoundaryTrace(points=(1 + 0j, 0.5 + 0.5j, 0.5 - 0.5j), angles=(0.0, 1.0, 2.0))


def test_format_params():
    assert format_params({}) == "-"
    assert format_params({"A": 1.0, "B": -1.0, "n": 1}) == "A=1,B=-1,n=1"
    assert format_params({"alpha": 0.25, "cs_reading": "power"}) == "alpha=0.25,cs_reading=power"


def test_radius_json():
    assert json.loads(radius_json(RESULT)) == {
        "class": "janowski",
        "params": {"A": 1.0, "B": -1.0, "n": 1},
        "value": 0.25,
        "method": "closed-form",
        "residual": 0,
    }


def test_radius_csv():
    assert radius_csv(RESULT) == (
        "class,params,value,method,residual\n" 'janowski,"A=1,B=-1,n=1",0.25,closed-form,0\n'
    )


def test_radius_text():
    lines = radius_text(RESULT).splitlines()
    assert lines[0].split() == ["class", "params", "value", "method", "residual"]
    assert lines[1].split() == ["janowski", "A=1,B=-1,n=1", "0.250000", "closed-form", "0.0e+00"]


def test_reports_text_lists_notes():
    text = reports_text(REPORTS)
    lines = text.splitlines()
    assert lines[0].split() == ["class", "params", "formula", "oracle", "gap", "status"]
    assert lines[1].split()[-1] == "PASS"
    assert lines[2].split()[-1] == "FLAGGED"
    assert lines[3] == "notes:"
    assert lines[4] == "  m-beta beta=2,n=1: literal formula 0.250000"


def test_reports_csv():
    rows = reports_csv(REPORTS).splitlines()
    assert rows[0] == "class,params,formula,oracle,gap,status"
    assert rows[1] == "rl,-,0.5,0.5,0,PASS"
    assert rows[2] == 'm-beta,"beta=2,n=1",0.25,0.125,0.125,FLAGGED'


def test_reports_json():
    data = json.loads(reports_json(REPORTS))
    assert [row["status"] for row in data] == ["PASS", "FLAGGED"]
    assert data[0]["min_real_part_at_formula_radius"] is None
    assert data[1]["notes"] == ["literal formula 0.250000"]
    assert data[1]["params"] == {"beta": 2.0, "n": 1}


def test_boundary_csv():
    rows = boundary_csv(TRIANGLE, TRIANGLE).splitlines()
    assert rows[0] == "curve,t,re,im"
    assert rows[1] == "boundary,0,1,0"
    assert rows[4] == "image,0,1,0"
    assert len(rows) == 7


def test_boundary_svg():
    lines = boundary_svg(TRIANGLE, TRIANGLE).splitlines()
    assert lines[0].startswith("<svg ")
    assert lines[1].startswith("<style>")
    assert lines[2] == '<polyline class="boundary" points="1,-0 0.5,-0.5 0.5,0.5 1,-0"/>'
    assert lines[3].startswith('<polyline class="image"')
    assert lines[4] == "</svg>"


def test_table_renderings():
    rows = [ConstantRow("rl", 0.75, 0.5), ConstantRow("g1(1)", 0.125, None)]
    assert table_csv(rows).splitlines()[1:] == ["rl,0.75,0.5", "g1(1),0.125,"]
    assert table_text(rows).splitlines()[2].split() == ["g1(1)", "0.125000", "-"]
    assert json.loads(table_json(rows))[1] == {"name": "g1(1)", "value": 0.125, "quoted": None}
