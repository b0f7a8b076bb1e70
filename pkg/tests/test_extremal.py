import math

import numpy as np
import pytest

from minda_radii.catalog import catalog_get
from minda_radii.extremal import (
    f0_hat,
    f0_series,
    janowski_tn,
    janowski_tn_product,
    koebe_radius,
    synth_f0,
)
from minda_radii.series import SeriesError, series_derivative, series_eval, series_mul, series_shift


@pytest.fixture(scope="module")
def synthesized(entries):
    return {f.id: synth_f0(f) for f in entries}


def test_ode_residual(entries, synthesized):
    # z f0' = psi f0 coefficientwise
    for f in entries:
        s = synthesized[f.id].series
        lhs = series_shift(series_derivative(s)).coeffs[:-1]
        rhs = series_mul(f.series(s.order), s).coeffs[:-1]
        assert np.max(np.abs(lhs - rhs)) < 1e-10, f.id
        assert s.coeffs[0] == 0 and s.coeffs[1] == pytest.approx(1.0)


def test_closed_form_vs_series(synthesized, rng):
    z = 0.9 * np.sqrt(rng.random(50)) * np.exp(2j * np.pi * rng.random(50))
    for cid in ("janowski", "cardioid", "lemniscate", "order_alpha"):
        e = synthesized[cid]
        s = e.series_for(0.9)
        assert np.max(np.abs(e.closed_form(z) - series_eval(s, z))) < 1e-8, cid


def test_koebe_closed_forms(synthesized):
    assert koebe_radius(synthesized["cardioid"]) == pytest.approx(math.exp(1 / math.e - 1), abs=1e-12)
    assert koebe_radius(synthesized["lemniscate"]) == pytest.approx(4 / math.e**2, abs=1e-12)
    for a in (0.0, 0.25, 0.5):
        e = synth_f0(catalog_get("order_alpha", alpha=a))
        assert e.koebe_radius == 2.0 ** (-2 * (1 - a))
        assert e.koebe_method == "closed_form"


def test_koebe_numeric_routes_agree():
    # sqrt_plus has no closed form attached; it must reproduce the lemniscate value
    e = synth_f0(catalog_get("sqrt_plus"))
    assert e.koebe_method != "closed_form"
    assert e.koebe_radius == pytest.approx(4 / math.e**2, abs=1e-9)
    assert synth_f0(catalog_get("linear", beta=1.0)).koebe_radius == pytest.approx(math.exp(-1), abs=1e-10)


def test_koebe_bounds_and_growth_monotone(entries, synthesized):
    for f in entries:
        cid, e = f.id, synthesized[f.id]
        assert 0 < e.koebe_radius <= 1, cid
        top = min(0.9, 0.99 * f.domain_radius)
        lo = [e.growth_bounds(r)[0] for r in np.linspace(0.05, top, 15)]
        assert np.all(np.diff(lo) > 0), cid


def test_growth_sandwich(synthesized, rng):
    for cid in ("cardioid", "exp", "sine", "janowski"):
        e = synthesized[cid]
        for _ in range(20):
            r, phi, t = 0.8 * rng.random() + 0.05, 2 * math.pi * rng.random(), 2 * math.pi * rng.random()
            z0 = r * complex(math.cos(t), math.sin(t))
            val = abs(np.exp(-1j * phi) * e(np.exp(1j * phi) * z0))
            lo, hi = e.growth_bounds(r)
            assert lo - 1e-12 <= val <= hi + 1e-12


def test_cardioid_coefficients_bell():
    s = f0_series(catalog_get("cardioid"), 12).coeffs.real
    bell = [1]
    for n in range(11):
        bell.append(sum(math.comb(n, k) * bell[k] for k in range(n + 1)))
    want = [0.0] + [bell[n] / math.factorial(n) for n in range(12)]
    assert np.allclose(s, want, atol=1e-14)
    assert np.allclose(s[:5], [0, 1, 1, 1, 5 / 6])


def test_koebe_function_series():
    s = f0_series(catalog_get("order_alpha"), 10).coeffs.real
    assert np.allclose(s, np.arange(11), atol=1e-12)


def test_rejects_unnormalized():
    with pytest.raises(SeriesError):
        f0_series(catalog_get("ab_power", a=2, b=2), 16)
    with pytest.raises(ValueError):
        synth_f0(catalog_get("exp"), 4)


def test_f0_hat(synthesized):
    e = synthesized["cardioid"]
    assert f0_hat(e, 0.0) == 0.0
    for r in (0.2, 0.5, 0.9):
        assert f0_hat(e, r) == pytest.approx(r * math.exp(math.exp(r) - 1), rel=1e-12)
    # z (1 - z/2)^-2 has t_n = n 2^(1-n); at r = 1/2 the sum is 8/9
    j = synth_f0(catalog_get("janowski", D=0.5, E=-0.5))
    assert f0_hat(j, 0.5) == pytest.approx(8 / 9, rel=1e-12)
    with pytest.raises(ValueError):
        f0_hat(e, 1.5)


def test_janowski_tn():
    assert janowski_tn(1, -1, 3) == pytest.approx(3)
    assert janowski_tn(1, -1, 2) == pytest.approx(2)
    assert janowski_tn(0.5, -0.5, 2) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        janowski_tn(1, 0, 3)


@pytest.mark.parametrize("D,E", [(1, -1), (0.5, -0.5), (0.3, -0.8), (0.9, 0.2)])
def test_janowski_tn_forms_agree(D, E):
    s = f0_series(catalog_get("janowski", D=D, E=E), 12).coeffs.real
    for n in range(2, 12):
        assert janowski_tn(D, E, n) == pytest.approx(janowski_tn_product(D, E, n), rel=1e-12, abs=1e-15)
        assert janowski_tn(D, E, n) == pytest.approx(s[n], rel=1e-10, abs=1e-14)
