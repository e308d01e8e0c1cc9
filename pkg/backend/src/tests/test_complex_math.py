import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.complex_math import (
    cexp,
    csin,
    csinh,
    int_power,
    log_array,
    principal_log,
    principal_sqrt,
    sqrt_array,
)
from src.core.exceptions import DomainError

moduli = st.floats(min_value=1e-6, max_value=1e6)
# -pi itself rounds onto the upper lip of the cut
arguments = st.floats(min_value=-3.14, max_value=math.pi)
complex_values = st.builds(lambda m, a: cmath.rect(m, a), moduli, arguments)


def test_principal_log_examples():
    assert principal_log(1) == 0
    assert principal_log(complex(math.e, 0)) == pytest.approx(1 + 0j, abs=1e-15)
    assert principal_log(-1) == pytest.approx(complex(0, math.pi), abs=1e-15)


def test_principal_log_negative_zero_imaginary_part_stays_on_upper_lip():
    assert principal_log(complex(-1.0, -0.0)).imag == pytest.approx(math.pi)


def test_principal_log_of_zero_raises():
    with pytest.raises(DomainError):
        principal_log(0)


def test_non_finite_input_raises():
    with pytest.raises(DomainError):
        principal_log(complex(math.inf, 0))


def test_principal_sqrt_examples():
    assert principal_sqrt(4) == 2
    assert principal_sqrt(0) == 0
    assert principal_sqrt(2j) == pytest.approx(1 + 1j, abs=1e-15)
    assert principal_sqrt(-4) == pytest.approx(2j)


def test_entire_functions():
    assert cexp(0) == 1
    assert csin(0) == 0
    assert csinh(math.log(2)).real == pytest.approx(0.75, abs=1e-15)


def test_cexp_overflow_is_a_domain_error():
    with pytest.raises(DomainError):
        cexp(1000)


@given(complex_values)
def test_exp_inverts_log(w):
    assert abs(cmath.exp(principal_log(w)) - w) <= 1e-13 * abs(w)


@given(complex_values)
def test_sqrt_squares_back(w):
    assert abs(principal_sqrt(w) ** 2 - w) <= 1e-13 * abs(w)


def sweep_points(seed: int, count: int = 10_000) -> list[complex]:
    rng = np.random.default_rng(seed)
    moduli = 10.0 ** rng.uniform(-6, 6, count)
    arguments = rng.uniform(-3.14, math.pi, count)
    return [cmath.rect(m, a) for m, a in zip(moduli, arguments)]


def test_exp_inverts_log_over_a_seeded_sweep():
    for w in sweep_points(3):
        assert abs(cmath.exp(principal_log(w)) - w) <= 1e-13 * abs(w)


def test_sqrt_squares_back_over_a_seeded_sweep():
    for w in sweep_points(5):
        assert abs(principal_sqrt(w) ** 2 - w) <= 1e-13 * abs(w)


@given(complex_values)
def test_log_argument_in_principal_range(w):
    argument = principal_log(w).imag
    assert -math.pi < argument <= math.pi


@given(complex_values)
def test_sqrt_has_nonnegative_real_part(w):
    assert principal_sqrt(w).real >= 0


def test_array_helpers_match_scalar_branch():
    values = np.array([4, 2j, -1 - 0.0j, 0.3 - 0.7j], dtype=np.complex128)
    expected_log = [principal_log(complex(v)) for v in values]
    expected_sqrt = [principal_sqrt(complex(v)) for v in values]
    np.testing.assert_allclose(log_array(values), expected_log, rtol=1e-14)
    np.testing.assert_allclose(sqrt_array(values), expected_sqrt, rtol=1e-14)


def test_log_array_of_zero_is_minus_infinity():
    assert log_array(np.array([0j]))[0].real == -math.inf


def test_rl_square_root_is_continuous_on_its_circle():
    # sqrt((1-z)/(1+c z)) along |z| = 0.738309 must not jump across a branch cut
    c = 2 * (math.sqrt(2) - 1)
    z = 0.738309 * np.exp(2j * np.pi * np.arange(4096) / 4096)
    values = sqrt_array((1 - z) / (1 + c * z))
    jumps = np.abs(np.diff(np.append(values, values[0])))
    assert jumps.max() < 0.01


@pytest.mark.parametrize("n", [1, 2, 3, 7, 64])
def test_int_power_matches_builtin(n):
    z = 0.9 * cmath.exp(0.3j)
    assert complex(int_power(z, n)) == pytest.approx(z**n, rel=1e-13)


@pytest.mark.parametrize("n", [0, 65])
def test_int_power_rejects_unsupported_exponents(n):
    with pytest.raises(DomainError):
        int_power(0.5, n)
