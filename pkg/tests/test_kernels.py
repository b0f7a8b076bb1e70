import math

import numpy as np
import pytest

from minda_radii import kernels


def square():
    return np.array([0.0, 1.0, 1.0, 0.0]), np.array([0.0, 0.0, 1.0, 1.0])


def test_backend_selected():
    assert kernels.BACKEND in ("compiled", "python")
    assert "python" in kernels.available_backends()


def test_even_odd_square(backend):
    vx, vy = square()
    px = np.array([0.5, 1.5, 0.25, -0.1])
    py = np.array([0.5, 0.5, 0.9, 0.5])
    got = kernels.even_odd_contains(px, py, vx, vy, impl=backend)
    assert got.tolist() == [True, False, True, False]


def test_distance_square(backend):
    vx, vy = square()
    d = kernels.min_segment_distance(np.array([0.5, 2.0, 0.5]), np.array([0.5, 0.5, -1.0]),
                                     vx, vy, impl=backend)
    assert np.allclose(d, [0.5, 1.0, 1.0])


def test_polygon_backends_agree(backend, rng):
    t = 2 * math.pi * np.arange(300) / 300
    rad = 1.0 + 0.3 * np.cos(5 * t)
    vx, vy = rad * np.cos(t), rad * np.sin(t)
    px, py = rng.uniform(-1.5, 1.5, 500), rng.uniform(-1.5, 1.5, 500)
    ref = kernels.available_backends()["python"]
    assert np.array_equal(kernels.even_odd_contains(px, py, vx, vy, impl=backend),
                          kernels.even_odd_contains(px, py, vx, vy, impl=ref))
    assert np.allclose(kernels.min_segment_distance(px, py, vx, vy, impl=backend),
                       kernels.min_segment_distance(px, py, vx, vy, impl=ref), atol=1e-13)


def test_pure_env_forces_fallback():
    import subprocess
    import sys

    out = subprocess.run([sys.executable, "-c", "from minda_radii import kernels; print(kernels.BACKEND)"],
                         env={"MINDA_RADII_PURE": "1", "PATH": ""}, capture_output=True, text=True)
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("n", [2, 3, 17])
def test_compose_identity(backend, n):
    a = np.arange(1, n + 1, dtype=complex)
    w = np.zeros(n, dtype=complex)
    w[1] = 1.0
    assert np.allclose(kernels.compose(a, w, impl=backend), a)
