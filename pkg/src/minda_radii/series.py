"""Truncated power series with complex coefficients.

A :class:`PowerSeries` holds ``c_0 .. c_N``; every binary operation truncates
to the smaller order of its operands. The recurrences for products,
exponentials, quotients and composition run in :mod:`minda_radii.kernels`.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import kernels

DEFAULT_ORDER = int(os.environ.get("MINDA_RADII_ORDER", "64"))
MAX_ORDER = 512
# tolerance for the c0 = 0 / c0 = 1 preconditions
_C0_TOL = 1e-12


class SeriesError(ValueError):
    """Raised when a series operation's precondition fails."""


class ConvergenceError(RuntimeError):
    """Raised when a truncated series cannot be trusted at the requested point."""


@dataclass(frozen=True, eq=False)
class PowerSeries:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128).ravel()
        if c.size < 2:
            raise SeriesError("a series needs truncation order N >= 1")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def coeff_list(self) -> list:
        """Coefficients as Python complexes, highest order first (cached)."""
        cached = self.__dict__.get("_rev")
        if cached is None:
            cached = [complex(c) for c in self.coeffs[::-1]]
            object.__setattr__(self, "_rev", cached)
        return cached

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def constant(cls, value: complex, order: int = DEFAULT_ORDER) -> "PowerSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        """The series of ``z``."""
        c = np.zeros(order + 1, dtype=np.complex128)
        c[1] = 1.0
        return cls(c)

    @classmethod
    def from_coeffs(cls, coeffs, order: int | None = None) -> "PowerSeries":
        """Pad (with zeros) or cut ``coeffs`` to the given order."""
        c = np.asarray(coeffs, dtype=np.complex128)
        if order is None:
            return cls(c)
        out = np.zeros(order + 1, dtype=np.complex128)
        m = min(order + 1, c.size)
        out[:m] = c[:m]
        return cls(out)

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries.from_coeffs(self.coeffs, order)

    @property
    def is_normalized(self) -> bool:
        return abs(self.coeffs[0] - 1.0) <= _C0_TOL

    @property
    def is_vanishing(self) -> bool:
        return abs(self.coeffs[0]) <= _C0_TOL

    @property
    def real(self) -> np.ndarray:
        return self.coeffs.real.copy()

    def __call__(self, z):
        return series_eval(self, z)

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            return PowerSeries(self.coeffs[: n + 1] + other.coeffs[: n + 1])
        c = self.coeffs.copy()
        c[0] += other
        return PowerSeries(c)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        return PowerSeries(self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return series_div(self, other)
        return PowerSeries(self.coeffs / other)

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:4])
        return f"PowerSeries(N={self.order}, [{head}, ...])"


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return PowerSeries(kernels.cauchy_product(a.coeffs, b.coeffs))


def series_exp(a: PowerSeries) -> PowerSeries:
    """exp(a) for a series with vanishing constant term."""
    if not a.is_vanishing:
        raise SeriesError(f"series_exp needs c0 = 0, got {a.coeffs[0]!r}")
    c = a.coeffs.copy()
    c[0] = 0.0
    return PowerSeries(kernels.exp_recurrence(c))


def series_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    if b.coeffs[0] == 0:
        raise SeriesError("division by a series with b0 = 0 (pole at the origin)")
    return PowerSeries(kernels.div_recurrence(a.coeffs, b.coeffs))


def series_derivative(a: PowerSeries) -> PowerSeries:
    """Termwise derivative; the top coefficient is padded with 0 to keep N."""
    n = a.order
    c = np.zeros(n + 1, dtype=np.complex128)
    c[:n] = a.coeffs[1:] * np.arange(1, n + 1)
    return PowerSeries(c)


def series_log(a: PowerSeries) -> PowerSeries:
    """Principal log of a normalized series (c0 = 1)."""
    if not a.is_normalized:
        raise SeriesError(f"series_log needs c0 = 1, got {a.coeffs[0]!r}")
    q = series_div(series_derivative(a), a).coeffs
    n = a.order
    c = np.zeros(n + 1, dtype=np.complex128)
    c[1:] = q[:n] / np.arange(1, n + 1)
    return PowerSeries(c)


def series_pow(a: PowerSeries, p: float) -> PowerSeries:
    """a**p on the principal branch, for normalized ``a``."""
    return series_exp(series_log(a) * p)


def series_integrate_kernel(psi: PowerSeries) -> PowerSeries:
    """Coefficients of the integral from 0 to z of (psi(t) - 1)/t dt."""
    if not psi.is_normalized:
        raise SeriesError(f"integrate_kernel needs c0 = 1, got {psi.coeffs[0]!r}")
    n = psi.order
    c = np.zeros(n + 1, dtype=np.complex128)
    c[1:] = psi.coeffs[1:] / np.arange(1, n + 1)
    return PowerSeries(c)


def series_mean_integral(a: PowerSeries) -> PowerSeries:
    """(1/z) times the integral of ``a`` from 0 to z, coefficient a_n/(n+1)."""
    return PowerSeries(a.coeffs / np.arange(1, a.order + 2))


def series_shift(a: PowerSeries) -> PowerSeries:
    """z * a(z), keeping the truncation order."""
    c = np.zeros_like(a.coeffs)
    c[1:] = a.coeffs[:-1]
    return PowerSeries(c)


def series_unshift(a: PowerSeries) -> PowerSeries:
    """a(z) / z for a vanishing series; the top coefficient is padded with 0."""
    if not a.is_vanishing:
        raise SeriesError("a(z)/z needs c0 = 0")
    c = np.zeros_like(a.coeffs)
    c[:-1] = a.coeffs[1:]
    return PowerSeries(c)


def series_compose(a: PowerSeries, w: PowerSeries) -> PowerSeries:
    """a(w(z)) for an inner series with w(0) = 0."""
    if not w.is_vanishing:
        raise SeriesError("composition needs an inner series with w(0) = 0")
    wc = w.coeffs.copy()
    wc[0] = 0.0
    return PowerSeries(kernels.compose(a.coeffs, wc))


def series_scale(a: PowerSeries, s: complex) -> PowerSeries:
    """a(s z)."""
    return PowerSeries(a.coeffs * s ** np.arange(a.order + 1))


def series_eval(a: PowerSeries, z):
    """Horner evaluation; ``z`` may be a scalar or an array."""
    if np.isscalar(z) or np.ndim(z) == 0:
        # plain-Python Horner is several times faster than numpy on scalars
        w = complex(z)
        acc = 0j
        for c in a.coeff_list:
            acc = acc * w + c
        return np.complex128(acc)
    z = np.asarray(z, dtype=np.complex128)
    acc = np.full(z.shape, a.coeffs[-1], dtype=np.complex128)
    for c in a.coeffs[-2::-1]:
        acc = acc * z + c
    return acc


def series_abs_eval(a: PowerSeries, r):
    """Sum of |c_n| r^n (the majorant series)."""
    r = np.asarray(r, dtype=np.float64)
    acc = np.full(r.shape, abs(a.coeffs[-1]))
    for c in np.abs(a.coeffs[-2::-1]):
        acc = acc * r + c
    return float(acc) if acc.ndim == 0 else acc


def tail_estimate(a: PowerSeries, r: float) -> float:
    """Crude size of the neglected tail at radius ``r``.

    Uses the last two coefficients so that odd/even-only series are not
    reported as converged because one trailing coefficient happens to be 0.
    """
    n = a.order
    return n * max(abs(a.coeffs[-1]) * r**n, abs(a.coeffs[-2]) * r ** (n - 1))


def series_from_function(fn: Callable, order: int = DEFAULT_ORDER, radius: float = 0.5,
                         samples: int | None = None) -> PowerSeries:
    """Taylor coefficients of an analytic ``fn`` by the trapezoid rule on |z| = radius.

    ``fn`` must accept numpy arrays and be analytic on a disk slightly larger
    than ``radius``.
    """
    m = samples or max(4 * (order + 1), 256)
    z = radius * np.exp(2j * np.pi * np.arange(m) / m)
    vals = np.asarray(fn(z), dtype=np.complex128)
    c = np.fft.fft(vals)[: order + 1] / m
    return PowerSeries(c / radius ** np.arange(order + 1))


def adaptive_series(build: Callable[[int], PowerSeries], r: float, tol: float = 1e-10,
                    order: int = DEFAULT_ORDER) -> PowerSeries:
    """Build a series at increasing order until its tail at ``r`` is below ``tol``.

    Order doubles from ``order`` up to :data:`MAX_ORDER`.
    """
    n = order
    while True:
        s = build(n)
        if tail_estimate(s, r) < tol:
            return s
        if n >= MAX_ORDER:
            raise ConvergenceError(
                f"series tail at r={r} is {tail_estimate(s, r):.3g} even at N={n}"
            )
        n = min(2 * n, MAX_ORDER)


def factorial_series(order: int = DEFAULT_ORDER) -> PowerSeries:
    """exp(z) directly from 1/n!."""
    return PowerSeries([math.exp(-math.lgamma(k + 1)) for k in range(order + 1)])
