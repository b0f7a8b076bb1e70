"""Backend selection for the hot loops.

The compiled Cython module is used when it imports; otherwise the numpy
fallback is used. Set ``MINDA_RADII_PURE=1`` to force the fallback.
"""

import os

import numpy as np

from . import _fallback

if os.environ.get("MINDA_RADII_PURE", "") not in ("", "0"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl

        BACKEND = "compiled"
    except ImportError:  # extension not built
        _impl = _fallback
        BACKEND = "python"


def _c(x):
    return np.ascontiguousarray(x, dtype=np.complex128)


def _f(x):
    return np.ascontiguousarray(x, dtype=np.float64)


def cauchy_product(a, b, impl=None):
    return (impl or _impl).cauchy_product(_c(a), _c(b))


def exp_recurrence(a, impl=None):
    return (impl or _impl).exp_recurrence(_c(a))


def div_recurrence(a, b, impl=None):
    return (impl or _impl).div_recurrence(_c(a), _c(b))


def compose(a, w, impl=None):
    return (impl or _impl).compose(_c(a), _c(w))


def even_odd_contains(px, py, vx, vy, impl=None):
    return np.asarray((impl or _impl).even_odd_contains(_f(px), _f(py), _f(vx), _f(vy)), dtype=bool)


def min_segment_distance(px, py, vx, vy, impl=None):
    return np.asarray((impl or _impl).min_segment_distance(_f(px), _f(py), _f(vx), _f(vy)))


def available_backends():
    """Return ``{name: module}`` for every backend importable here."""
    out = {"python": _fallback}
    try:
        from . import _kernels

        out["compiled"] = _kernels
    except ImportError:
        pass
    return out
