import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, special

from minda_radii.special import (
    HypergeometricError,
    HypergeometricQuery,
    gauss_2f1,
    hyp1f1,
    hyp2f1,
    janowski_q_minus,
    kummer_1f1,
)


def q_integral(D, E, r):
    # q(z) = integral_0^1 ((1 + E t z)/(1 + E z))^((D-E)/E) dt at z = -r
    z = -r
    if E == 0:
        f = lambda t: math.exp(D * (t - 1) * z)
    else:
        f = lambda t: ((1 + E * t * z) / (1 + E * z)) ** ((D - E) / E)
    return integrate.quad(f, 0, 1, epsabs=1e-13, epsrel=1e-13)[0]


def test_trivial_values():
    # default tolerance is 1e-12 relative
    assert hyp2f1(2, 1, 2, 0.25) == pytest.approx(4 / 3, rel=1e-12)
    assert hyp2f1(2, 1, 2, 0.25, tol=1e-15) == pytest.approx(4 / 3, rel=1e-15)
    assert hyp2f1(0.3, 1.7, 2.5, 0.0) == 1.0
    assert hyp1f1(1, 2, 1.0) == pytest.approx(math.e - 1, rel=1e-13)
    assert hyp1f1(0.4, 1.3, 0.0) == 1.0
    assert hyp1f1(1, 2, -0.5) == pytest.approx((1 - math.exp(-0.5)) / 0.5, rel=1e-13)


def test_contiguity():
    for x in (-0.6, -0.1, 0.2, 0.7):
        assert hyp2f1(1, 1, 2, x) == pytest.approx(-math.log(1 - x) / x, rel=1e-10)


def test_query_objects():
    assert gauss_2f1(HypergeometricQuery(2, 1, 2, 0.5)) == pytest.approx(2.0)
    assert kummer_1f1(HypergeometricQuery(1, 0, 2, 1.0)) == pytest.approx(math.e - 1)


def test_errors():
    with pytest.raises(HypergeometricError):
        hyp2f1(1, 1, -2, 0.1)
    with pytest.raises(HypergeometricError):
        hyp2f1(1, 1, 2, 1.0)


def test_q_minus_example():
    D, E, r = 0.5, -0.5, 0.4
    assert janowski_q_minus(D, E, r) == pytest.approx(q_integral(D, E, r), rel=1e-12)


def test_q_minus_grid_vs_quadrature():
    for E in (-1.0, -0.7, -0.3):
        for D in np.linspace(-abs(E) + 1e-3, 1.0, 5):
            if D <= E or 1 + D / E < 0:
                continue
            for r in (0.1, 0.5, 0.9):
                assert abs(janowski_q_minus(D, E, r) - q_integral(D, E, r)) < 1e-9


def test_kummer_kernel_consistency():
    # psi(-r) for phi = 1 + Dz equals 1 / 1F1(1, 2; Dr) = D r e^{-Dr} / (1 - e^{-Dr})
    for D in (0.3, 1.0):
        for r in (0.2, 0.6):
            closed = D * r * math.exp(-D * r) / (1 - math.exp(-D * r))
            assert 1 / janowski_q_minus(D, 0.0, r) == pytest.approx(closed, rel=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.2, 4), st.floats(-0.9, 0.9))
def test_2f1_matches_scipy(a, b, c, x):
    ref = special.hyp2f1(a, b, c, x)
    assert hyp2f1(a, b, c, x) == pytest.approx(ref, rel=1e-9, abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.floats(-3, 3), st.floats(0.2, 4), st.floats(-10, 10))
def test_1f1_matches_scipy(a, c, x):
    ref = special.hyp1f1(a, c, x)
    assert hyp1f1(a, c, x) == pytest.approx(ref, rel=1e-9, abs=1e-10)
