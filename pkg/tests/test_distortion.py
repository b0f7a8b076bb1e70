import math
import time

import numpy as np
import pytest

from minda_radii.catalog import CARDIOID_SWITCH, DomainError, all_entries, catalog_get
from minda_radii.distortion import distortion_bounds, table1_reproduce
from minda_radii.extremal import synth_f0
from minda_radii.series import series_derivative, series_eval

# r, theta1, |psi(r e^{i theta1})|, lower bound
LOWER_TABLE = [
    ("1", 1.88438, 0.372412, 0.197923),
    ("4/5", 2.01859, 0.527912, 0.304374),
    ("2/3", 2.17677, 0.611553, 0.375966),
    ("1/2", 2.58169, 0.693287, 0.467769),
]


def test_lower_bound_table_rows():
    t0 = time.perf_counter()
    rows = table1_reproduce()
    assert time.perf_counter() - t0 < 1.0
    for row, (label, th, mod, low) in zip(rows, LOWER_TABLE):
        assert row["r"] == label
        assert row["theta1"] == pytest.approx(th, abs=5e-5)
        assert row["modulus"] == pytest.approx(mod, abs=5e-5)
        assert row["lower"] == pytest.approx(low, abs=5e-5)


def test_lower_bound_table_axis_row():
    row = table1_reproduce()[-1]
    r = row["r_value"]
    assert r < CARDIOID_SWITCH == pytest.approx((3 - math.sqrt(5)) / 2)
    assert row["theta1"] == pytest.approx(math.pi)
    assert row["modulus"] == pytest.approx(1 - r * math.exp(-r), abs=1e-12)
    e = synth_f0(catalog_get("cardioid"))
    assert row["lower"] == pytest.approx(e.derivative(-r).real, abs=1e-10)


def test_cardioid_example_values():
    f = catalog_get("cardioid")
    d = distortion_bounds(f, 0.5)
    assert d.lower == pytest.approx(0.467769, abs=5e-6)
    assert d.theta1 == pytest.approx(2.58169, abs=5e-5)
    assert distortion_bounds(f, 0.8).lower == pytest.approx(0.304374, abs=5e-6)


@pytest.mark.parametrize("r", [0.1, 0.25, 0.35])
def test_collapse_to_extremal_derivative(r):
    checked = 0
    for f in all_entries():
        if r >= f.domain_radius:
            continue
        row = distortion_bounds(f, r)
        on_axis = abs(row.theta1 - math.pi) < 1e-9 and abs(row.theta2) < 1e-9
        if not on_axis or f.orientation < 0:
            continue
        d = series_derivative(synth_f0(f).series_for(r))
        assert row.lower == pytest.approx(series_eval(d, -r).real, abs=1e-8), f.id
        assert row.upper == pytest.approx(series_eval(d, r).real, abs=1e-8), f.id
        checked += 1
    assert checked >= 5


def test_bounds_sandwich_random_class_members(rng):
    # rotations of f0 belong to the class
    f = catalog_get("exp")
    e = synth_f0(f)
    for r in (0.3, 0.6, 0.9):
        row = distortion_bounds(f, r, e)
        z = r * np.exp(2j * np.pi * rng.random(200))
        phi = 2 * np.pi * rng.random(200)
        vals = np.abs(e.derivative(np.exp(1j * phi) * z))
        assert np.all(vals >= row.lower - 1e-12) and np.all(vals <= row.upper + 1e-12)


def test_domain_errors():
    f = catalog_get("cardioid")
    for r in (0.0, 1.0, 1.2):
        with pytest.raises(DomainError):
            distortion_bounds(f, r)
