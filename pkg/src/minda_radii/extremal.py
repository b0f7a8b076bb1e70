"""The extremal function f0 of S*(psi) and quantities built from it.

f0 solves z f0'(z)/f0(z) = psi(z) with f0(0) = 0, f0'(0) = 1, i.e.
f0(z) = z exp(integral_0^z (psi(t) - 1)/t dt). Its Taylor series comes from
the series engine; closed forms are attached for the Janowski family, the
order-alpha class, the lemniscate and the cardioid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import integrate, special

from .catalog import MindaFunction
from .series import (
    DEFAULT_ORDER,
    MAX_ORDER,
    ConvergenceError,
    PowerSeries,
    SeriesError,
    series_abs_eval,
    series_eval,
    series_exp,
    series_integrate_kernel,
    series_shift,
    tail_estimate,
)

# tail tolerance when a series is evaluated at |z| = 1
KOEBE_TAIL_TOL = 1e-10
# tail tolerance for interior evaluations
INTERIOR_TAIL_TOL = 1e-14


def _janowski_closed(D: float, E: float) -> Callable:
    if E == 0.0:
        return lambda z: z * np.exp(D * z)
    p = (D - E) / E
    return lambda z: z * (1.0 + E * z) ** p


def _closed_form(psi: MindaFunction) -> Callable | None:
    if psi.id == "janowski":
        return _janowski_closed(psi.params["D"], psi.params["E"])
    if psi.id == "order_alpha":
        k = 2.0 * (1.0 - psi.params["alpha"])
        return lambda z: z / (1.0 - z) ** k
    if psi.id == "lemniscate":
        def f(z):
            s = np.sqrt(1.0 + z)
            return 4.0 * z * np.exp(2.0 * s - 2.0) / (1.0 + s) ** 2
        return f
    if psi.id == "cardioid":
        return lambda z: z * np.exp(np.exp(z) - 1.0)
    return None


def f0_series(psi: MindaFunction, order: int = DEFAULT_ORDER) -> PowerSeries:
    """z * exp(series of the integral of (psi(t) - 1)/t)."""
    s = psi.series(order)
    if not s.is_normalized:
        raise SeriesError(f"{psi.id}: psi(0) = {s.coeffs[0].real:.6g}, extremal synthesis needs psi(0) = 1")
    return series_shift(series_exp(series_integrate_kernel(s)))


@dataclass(eq=False)
class ExtremalFunction:
    psi: MindaFunction
    series: PowerSeries
    closed_form: Callable | None = None
    koebe_radius: float = float("nan")
    koebe_method: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def psi_id(self) -> str:
        return self.psi.id

    def series_for(self, r: float, tol: float = INTERIOR_TAIL_TOL) -> PowerSeries:
        """The f0 series at the smallest order whose tail at ``r`` is below ``tol``."""
        n = self.series.order
        while True:
            s = self._cache.get(n)
            if s is None:
                s = self.series if n == self.series.order else f0_series(self.psi, n)
                self._cache[n] = s
            if tail_estimate(s, r) < tol:
                return s
            if n >= MAX_ORDER:
                raise ConvergenceError(
                    f"{self.psi_id}: f0 series tail at r={r} is {tail_estimate(s, r):.3g} at N={n}"
                )
            n = min(2 * n, MAX_ORDER)

    def __call__(self, z):
        """f0(z), closed form when known, otherwise the (adaptive) series."""
        if self.closed_form is not None:
            with np.errstate(all="ignore"):
                return self.closed_form(np.asarray(z, dtype=np.complex128))[()]
        r = float(np.max(np.abs(z)))
        return series_eval(self.series_for(r), z)

    def derivative(self, z):
        """f0'(z) = psi(z) f0(z) / z, with f0'(0) = 1."""
        z = np.asarray(z, dtype=np.complex128)
        with np.errstate(all="ignore"):
            out = np.where(z == 0, 1.0 + 0j, self.psi.evaluator(z) * self(z) / np.where(z == 0, 1, z))
        return out[()]

    def growth_bounds(self, r: float) -> tuple[float, float]:
        """(min, max) of |f0| on |z| = r, attained on the real axis.

        For a positively oriented psi these are -f0(-r) and f0(r); the roles
        swap for a negatively oriented one.
        """
        lo, hi = float(np.real(-self(-r))), float(np.real(self(r)))
        if self.psi.orientation < 0:
            lo, hi = float(np.real(self(r))), float(np.real(-self(-r)))
        return lo, hi


def _koebe(psi: MindaFunction, base: PowerSeries, closed: Callable | None) -> tuple[float, str]:
    # the nearest boundary point of f0(D) is f0(-1) for psi'(0) > 0, f0(1) for psi'(0) < 0
    sigma = -1.0 if psi.orientation >= 0 else 1.0
    if closed is not None:
        return float(np.real(sigma * closed(np.complex128(sigma)))), "closed_form"
    n = base.order
    s = base
    while True:
        if tail_estimate(s, 1.0) < KOEBE_TAIL_TOL:
            return float(np.real(sigma * series_eval(s, sigma))), f"series(N={n})"
        if n >= MAX_ORDER:
            break
        n = min(2 * n, MAX_ORDER)
        s = f0_series(psi, n)
    # slowly decaying coefficients (singular psi on the boundary): integrate
    # log(sigma f0(sigma)) = integral_0^1 (psi(sigma s) - 1)/s ds directly
    def integrand(t):
        # quad never samples the endpoint t = 0, where the limit is sigma psi'(0)
        with np.errstate(all="ignore"):
            w = psi.evaluator(np.complex128(sigma * t))
        return (float(np.real(w)) - 1.0) / t

    val, err = integrate.quad(integrand, 0.0, 1.0, epsabs=1e-13, epsrel=1e-13, limit=200)
    if not math.isfinite(val) or err > 1e-9:
        raise ConvergenceError(f"{psi.id}: Koebe radius quadrature error estimate {err:.3g}")
    return math.exp(val), "quadrature"


def synth_f0(psi: MindaFunction, order: int = DEFAULT_ORDER) -> ExtremalFunction:
    """Build f0 for ``psi`` with its series, closed form and Koebe radius."""
    if order < 8:
        raise ValueError("synthesis order must be at least 8")
    base = f0_series(psi, order)
    closed = _closed_form(psi)
    rk, how = _koebe(psi, base, closed)
    if not rk > 0.0:
        raise ConvergenceError(f"{psi.id}: non-positive Koebe radius {rk}")
    return ExtremalFunction(psi=psi, series=base, closed_form=closed, koebe_radius=rk, koebe_method=how)


def koebe_radius(e: ExtremalFunction) -> float:
    return e.koebe_radius


def f0_hat(e: ExtremalFunction, r: float) -> float:
    """r + sum |t_n| r^n for 0 <= r <= 1."""
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"r must lie in [0, 1], got {r}")
    tol = KOEBE_TAIL_TOL if r >= 1.0 else INTERIOR_TAIL_TOL
    return series_abs_eval(e.series_for(r, tol), r)


def janowski_tn(D: float, E: float, n: int) -> float:
    """n-th Taylor coefficient of z (1 + E z)^((D - E)/E), by the binomial theorem."""
    if E == 0.0:
        raise ValueError("janowski_tn needs E != 0 (the E = 0 extremal is z exp(Dz))")
    if n < 2:
        raise ValueError("n must be >= 2")
    # generalized binomial by falling factorial; scipy's binom is nan at negative integers
    p, c = (D - E) / E, 1.0
    for j in range(n - 1):
        c *= (p - j) / (j + 1)
    return c * E ** (n - 1)


def janowski_tn_product(D: float, E: float, n: int) -> float:
    """The product form prod_{k=2}^{n} (D - (k-1)E) / (n-1)!."""
    if n < 2:
        raise ValueError("n must be >= 2")
    num = 1.0
    for k in range(2, n + 1):
        num *= D - (k - 1) * E
    return num / math.factorial(n - 1)
