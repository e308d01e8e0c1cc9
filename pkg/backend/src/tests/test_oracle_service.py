import math

import pytest

from src.config.oracle import OracleSettings
from src.core.exceptions import DomainError
from src.domains.sigmoid.catalog import (
    LEMNISCATE_ALPHA_MAX,
    ClassId,
    CsReading,
    ParamSet,
    extremal_q,
)
from src.domains.sigmoid.domain import sg_contains, sg_modulus
from src.domains.sigmoid.services.oracle_service import (
    VerificationStatus,
    circle_image,
    circle_max_h,
    convexity_min_real_part,
    convexity_oracle,
    oracle_radius,
)
from src.domains.sigmoid.services.radius_service import (
    compute_radius,
    lemniscate_literal_radius,
    m_beta_disk_radius,
)
from src.domains.sigmoid.services.verification import VerificationOrchestrator, default_grid

from .helpers import REPRESENTATIVE_PARAMS, circular_distance


def test_small_circle_is_inside(fast_settings):
    result = circle_max_h(ClassId.PE, ParamSet(), 0.01, settings=fast_settings)
    assert 0 < result.value < 0.1


def test_bs_formula_radius_touches(fast_settings):
    r = compute_radius(ClassId.BS, ParamSet(alpha=0.0)).value
    result = circle_max_h(ClassId.BS, ParamSet(alpha=0.0), r, settings=fast_settings)
    assert result.value == pytest.approx(1, abs=1e-9)


def test_cardioid_touches_at_angle_zero(fast_settings):
    result = circle_max_h(ClassId.CARDIOID_C, ParamSet(), 0.301221, settings=fast_settings)
    assert result.value == pytest.approx(1, abs=1e-6)
    assert circular_distance(result.angle, 0) <= 1e-6


CIRCLE_CLASSES = [
    (class_id, params)
    for class_id, params in REPRESENTATIVE_PARAMS
    if class_id is not ClassId.CONVEXITY_ORDER
]


@pytest.mark.parametrize("class_id, params", CIRCLE_CLASSES)
def test_circle_max_grows_with_the_radius(class_id, params, fast_settings):
    formula = compute_radius(class_id, params).value
    radii = [formula * k / 21 for k in range(1, 21)]
    values = [circle_max_h(class_id, params, r, settings=fast_settings).value for r in radii]
    for smaller, larger in zip(values, values[1:]):
        assert larger >= smaller - 1e-12


def test_circle_radius_must_be_inside_the_disk(fast_settings):
    with pytest.raises(DomainError):
        circle_max_h(ClassId.RL, ParamSet(), 1.0, settings=fast_settings)
    with pytest.raises(DomainError):
        circle_max_h(ClassId.RL, ParamSet(), 0.0, settings=fast_settings)


def test_circle_image_needs_a_radius_below_one():
    with pytest.raises(DomainError):
        circle_image(ClassId.G1, ParamSet(n=4), 1.0, 16)


def test_circle_image_rejects_collapsed_sampling():
    with pytest.raises(DomainError, match="does not divide n"):
        circle_image(ClassId.G1, ParamSet(n=8), 0.5, 8)
    with pytest.raises(DomainError):
        circle_image(ClassId.G1, ParamSet(n=8), 0.5, 4)
    with pytest.raises(DomainError):
        circle_image(ClassId.PE, ParamSet(), 0.5, 2)


def test_circle_image_when_samples_do_not_divide_the_order():
    trace = circle_image(ClassId.G1, ParamSet(n=8), 0.5, 12)
    assert len(trace) == 12
    assert trace.points[3] == pytest.approx(trace.points[0], abs=1e-15)


def test_linear_close_to_starlike_image_does_not_collapse():
    params = ParamSet(alpha=0.25, n=4, cs_reading=CsReading.LINEAR)
    assert len(circle_image(ClassId.CLOSE_TO_STARLIKE, params, 0.2, 4)) == 4


def test_circle_image_points():
    trace = circle_image(ClassId.CARDIOID_C, ParamSet(), 0.2, 16)
    assert len(trace) == 16
    assert trace.points[0] == pytest.approx(1 + 0.8 / 3 + 0.08 / 3)
    assert all(sg_contains(w) for w in trace.points)


@pytest.mark.parametrize(
    "class_id, params",
    [
        (ClassId.CRESCENT, ParamSet()),
        (ClassId.G1, ParamSet(n=1)),
        (ClassId.RL, ParamSet()),
        (ClassId.PE, ParamSet()),
        (ClassId.EXP_ALPHA, ParamSet(alpha=0.25)),
        (ClassId.G3, ParamSet(n=2)),
    ],
)
def test_formula_matches_oracle(class_id, params, fast_settings):
    report = oracle_radius(class_id, params, fast_settings)
    assert report.abs_gap <= 1e-6
    assert report.status is VerificationStatus.PASS
    assert report.sharp_at_bracket
    assert report.max_modulus_at_formula_radius == pytest.approx(1, abs=1e-6)


def test_interior_of_the_oracle_radius(fast_settings):
    report = oracle_radius(ClassId.CARDIOID_C, ParamSet(), fast_settings)
    inner = circle_max_h(
        ClassId.CARDIOID_C, ParamSet(), 0.9 * report.oracle_radius, settings=fast_settings
    )
    assert inner.value < 1
    assert circular_distance(report.touch_angle, 0) <= 1e-6


@pytest.mark.parametrize("class_id, params", CIRCLE_CLASSES)
def test_image_is_strictly_inside_below_the_oracle_radius(class_id, params, fast_settings):
    report = oracle_radius(class_id, params, fast_settings)
    trace = circle_image(class_id, params, 0.9 * report.oracle_radius, 720)
    assert all(sg_contains(w) for w in trace.points)


def test_janowski_odd_order_touches_once(fast_settings):
    params = ParamSet(A=1.0, B=-1.0, n=1)
    report = oracle_radius(ClassId.JANOWSKI, params, fast_settings)
    r = report.oracle_radius
    assert circular_distance(report.touch_angle, 0) <= 1e-6
    assert sg_modulus(extremal_q(ClassId.JANOWSKI, params, r)) == pytest.approx(1, abs=1e-6)
    assert sg_modulus(extremal_q(ClassId.JANOWSKI, params, -r)) < 0.9


@pytest.mark.parametrize(
    "class_id, params",
    [
        (ClassId.JANOWSKI, ParamSet(A=1.0, B=-1.0, n=2)),
        (ClassId.G1, ParamSet(n=1)),
        (ClassId.G4, ParamSet(n=1)),
        (ClassId.W_CLASS, ParamSet(n=1)),
    ],
)
def test_touches_at_both_ends(class_id, params, fast_settings):
    report = oracle_radius(class_id, params, fast_settings)
    r = report.oracle_radius
    top = circle_max_h(class_id, params, r, settings=fast_settings).value
    for z in (r, -r):
        assert sg_modulus(extremal_q(class_id, params, z)) >= top - 1e-6


def test_unsharp_formula_clamped_to_one(fast_settings):
    report = oracle_radius(ClassId.JANOWSKI, ParamSet(A=0.5, B=0.25), fast_settings)
    assert report.formula_radius == 1.0
    assert not report.sharp_at_bracket
    assert report.oracle_radius == fast_settings.bracket_ceiling
    assert report.status is VerificationStatus.PASS


def test_lemniscate_at_the_top_of_its_alpha_range(fast_settings):
    params = ParamSet(alpha=0.75 * LEMNISCATE_ALPHA_MAX)
    report = oracle_radius(ClassId.LEMNISCATE_ALPHA, params, fast_settings)
    assert report.status is VerificationStatus.PASS
    literal = lemniscate_literal_radius(params.alpha)
    assert literal < 1
    assert report.notes[0].startswith(f"literal formula {literal:.6f}")
    assert f"oracle {report.oracle_radius:.6f}" in report.notes[0]


def test_lemniscate_below_the_cut_off_has_no_note(fast_settings):
    report = oracle_radius(ClassId.LEMNISCATE_ALPHA, ParamSet(alpha=0.25), fast_settings)
    assert report.notes == ()


def test_m_beta_is_flagged_and_the_oracle_follows_the_disk(fast_settings):
    report = oracle_radius(ClassId.M_BETA, ParamSet(beta=2.0), fast_settings)
    assert report.status is VerificationStatus.FLAGGED
    assert report.oracle_radius == pytest.approx(m_beta_disk_radius(2.0), abs=1e-6)
    assert report.abs_gap > 0.01
    assert report.notes[0].startswith(f"literal formula {(math.e - 1) / (3 * math.e):.6f}")


@pytest.mark.parametrize("class_id", [ClassId.NEPHROID, ClassId.SINE])
def test_unclaimed_sharpness_is_a_finding(class_id, fast_settings):
    report = oracle_radius(class_id, ParamSet(), fast_settings)
    assert report.status is VerificationStatus.FINDING
    assert report.oracle_radius > report.formula_radius
    assert "sharpness not claimed" in report.notes[0]


def test_sine_image_at_the_quoted_radius_stays_inside(fast_settings):
    result = circle_max_h(ClassId.SINE, ParamSet(), 0.447074, settings=fast_settings)
    assert result.value < 1


def test_close_to_starlike_higher_order_is_flagged(fast_settings):
    params = ParamSet(alpha=0.25, n=2)
    report = oracle_radius(ClassId.CLOSE_TO_STARLIKE, params, fast_settings)
    assert report.status is VerificationStatus.FLAGGED
    assert report.notes[0].startswith("linear reading oracle")
    assert "power reading oracle" in report.notes[0]

    power = oracle_radius(
        ClassId.CLOSE_TO_STARLIKE, params.with_updates(cs_reading=CsReading.POWER), fast_settings
    )
    assert power.abs_gap <= 1e-6
    assert power.status is VerificationStatus.FLAGGED


def test_close_to_starlike_first_order_passes(fast_settings):
    report = oracle_radius(ClassId.CLOSE_TO_STARLIKE, ParamSet(alpha=0.5, n=1), fast_settings)
    assert report.status is VerificationStatus.PASS
    assert report.notes == ()


@pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.75])
def test_convexity_oracle(alpha, fast_settings):
    report = convexity_oracle(alpha, fast_settings)
    assert report.abs_gap <= 1e-6
    assert circular_distance(report.touch_angle, math.pi) <= 1e-4
    assert report.max_modulus_at_formula_radius is None
    assert report.min_real_part_at_formula_radius == pytest.approx(alpha, abs=1e-6)
    assert report.status is VerificationStatus.PASS


def test_convexity_order_zero_value(fast_settings):
    assert convexity_oracle(0.0, fast_settings).oracle_radius == pytest.approx(0.852606, abs=1e-6)


def test_convexity_near_order_one(fast_settings):
    report = convexity_oracle(0.999, fast_settings)
    assert report.oracle_radius < 0.01
    assert report.abs_gap <= 1e-6


def test_convexity_dispatch_through_oracle_radius(fast_settings):
    report = oracle_radius(ClassId.CONVEXITY_ORDER, ParamSet(alpha=0.5), fast_settings)
    assert report.class_id is ClassId.CONVEXITY_ORDER
    assert report.min_real_part_at_formula_radius is not None


def test_convexity_min_real_part_at_small_radius(fast_settings):
    result = convexity_min_real_part(0.1, settings=fast_settings)
    assert result.value == pytest.approx((2 - 0.1 * math.exp(0.1)) / (1 + math.exp(0.1)), abs=1e-9)


def test_orchestrator_preserves_order(fast_settings):
    entries = default_grid([ClassId.CARDIOID_C, ClassId.RL, ClassId.G2])
    reports = VerificationOrchestrator(fast_settings, workers=3).run(entries)
    assert [report.class_id for report in reports] == [entry.class_id for entry in entries]
    assert [report.params for report in reports] == [entry.params for entry in entries]


def test_default_grid_shape():
    grid = default_grid()
    janowski = [entry for entry in grid if entry.class_id is ClassId.JANOWSKI]
    assert len(janowski) == 12
    m_beta = [entry for entry in grid if entry.class_id is ClassId.M_BETA]
    assert len(m_beta) == 9
    convexity = [entry.params.alpha for entry in grid if entry.class_id is ClassId.CONVEXITY_ORDER]
    assert convexity == [0.0, 0.25, 0.5, 0.75]


@pytest.mark.slow
def test_full_grid_has_no_failures():
    settings = OracleSettings(samples=1024, max_samples=8192)
    reports = VerificationOrchestrator(settings).run_grid()
    failures = [(r.class_id.value, r.relevant_params, r.abs_gap) for r in reports if r.failed]
    assert failures == []
