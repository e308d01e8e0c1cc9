import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.exceptions import DomainError
from src.domains.sigmoid.domain import (
    CENTRAL_RADIUS,
    LOWER_ENDPOINT,
    UPPER_ENDPOINT,
    BoundaryTrace,
    Disk,
    disk_in_sg,
    lemma_radius,
    sg_boundary,
    sg_contains,
    sg_modulus,
    sigmoid,
)

E = math.e


def test_sigmoid_values():
    assert sigmoid(0) == 1
    assert sigmoid(1).real == pytest.approx(2 * E / (1 + E), abs=1e-15)
    assert sigmoid(-1).real == pytest.approx(2 / (1 + E), abs=1e-15)
    assert sigmoid(1).real == pytest.approx(1.462117, abs=1e-6)


@pytest.mark.parametrize(
    "w, expected",
    [
        (1, True),
        (2 * E / (1 + E), False),
        (2 / (1 + E), False),
        (0.5, False),
        (0, False),
        (2, False),
        (1.2 + 0.1j, True),
    ],
)
def test_sg_contains(w, expected):
    assert sg_contains(w) is expected


def test_negative_ratio_is_outside():
    # w/(2-w) < 0 for w = 3; |Arg| = pi forces modulus > 1
    assert not sg_contains(3)


@given(
    st.floats(min_value=-3, max_value=3),
    st.floats(min_value=-3, max_value=3),
)
def test_membership_is_conjugation_symmetric(x, y):
    w = complex(x, y)
    assert sg_contains(w) == sg_contains(w.conjugate())


def test_lemma_radius_values():
    assert lemma_radius(1) == pytest.approx(0.4621171573, abs=1e-10)
    assert lemma_radius(1.2) == pytest.approx(0.2621171573, abs=1e-10)
    assert 0 < lemma_radius(LOWER_ENDPOINT + 1e-9) < 1e-8


@pytest.mark.parametrize("a", [LOWER_ENDPOINT, UPPER_ENDPOINT, 0.3, 1.7])
def test_lemma_radius_outside_interval_raises(a):
    with pytest.raises(DomainError):
        lemma_radius(a)


@pytest.mark.parametrize(
    "disk, expected",
    [
        (Disk(1, 0.46), True),
        (Disk(1, 0.47), False),
        (Disk(1, 0), True),
        (Disk(0.3, 0.01), False),
    ],
)
def test_disk_in_sg(disk, expected):
    assert disk_in_sg(disk) is expected


def test_disk_rejects_negative_radius():
    with pytest.raises(DomainError):
        Disk(1, -0.1)


def test_lemma_disks_are_inside_the_domain():
    rng = np.random.default_rng(20240101)
    centers = rng.uniform(LOWER_ENDPOINT, UPPER_ENDPOINT, size=100)
    for a in centers:
        radius = lemma_radius(a)
        moduli = radius * np.sqrt(rng.uniform(0, 1, size=100)) * (1 - 1e-6)
        angles = rng.uniform(0, 2 * np.pi, size=100)
        for w in a + moduli * np.exp(1j * angles):
            assert sg_contains(complex(w))


def test_lemma_disks_touch_the_nearer_endpoint():
    rng = np.random.default_rng(7)
    for a in rng.uniform(LOWER_ENDPOINT, UPPER_ENDPOINT, size=100):
        if a == 1:
            continue
        touch = a - lemma_radius(a) * math.copysign(1, 1 - a)
        assert sg_modulus(touch) == pytest.approx(1, abs=1e-10)


def test_centred_disk_touches_both_endpoints():
    assert sg_modulus(1 + CENTRAL_RADIUS) == pytest.approx(1, abs=1e-12)
    assert sg_modulus(1 - CENTRAL_RADIUS) == pytest.approx(1, abs=1e-12)


def test_sg_boundary_endpoints():
    trace = sg_boundary(4)
    assert trace.closed
    assert len(trace) == 4
    assert trace.points[0] == pytest.approx(2 * E / (1 + E), abs=1e-15)
    assert trace.points[2] == pytest.approx(2 / (1 + E), abs=1e-15)


def test_sg_boundary_points_lie_on_the_boundary():
    trace = sg_boundary(720)
    for w in trace.points:
        assert sg_modulus(w) == pytest.approx(1, abs=1e-12)
        assert not sg_contains(w)


def test_sg_boundary_needs_three_samples():
    with pytest.raises(DomainError):
        sg_boundary(2)


def test_boundary_trace_rejects_repeated_points():
    with pytest.raises(DomainError):
        BoundaryTrace(points=(1, 1, 2j), angles=(0.0, 1.0, 2.0))
