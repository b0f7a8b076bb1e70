"""Numeric checks of subordination, majorization sharpness and Bohr-type sums.

These are heuristic certificates on finite grids. Containment tests that come
closer to the boundary than :data:`MARGIN_TOL` are reported as inconclusive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from shapely.geometry import LinearRing

from . import kernels
from .catalog import MindaFunction
from .curves import trace_curve
from .extremal import ExtremalFunction, f0_series
from .series import (
    DEFAULT_ORDER,
    PowerSeries,
    SeriesError,
    series_abs_eval,
    series_compose,
    series_derivative,
    series_div,
    series_eval,
    series_from_function,
    series_mean_integral,
    series_mul,
    series_unshift,
)

BOUNDARY_SAMPLES = 4096
MARGIN_TOL = 1e-6
GL_NODES = 64
DEFAULT_SEED = 20240601

TRUE, FALSE, INCONCLUSIVE = "true", "false", "inconclusive"


@dataclass(frozen=True)
class Verdict:
    status: str
    margin: float
    details: dict = field(default_factory=dict)

    @property
    def value(self) -> bool | None:
        return {TRUE: True, FALSE: False}.get(self.status)

    def __bool__(self) -> bool:
        return self.status == TRUE

    def as_dict(self) -> dict:
        return {"status": self.status, "margin": self.margin, **self.details}


def _is_simple(curve) -> bool:
    pts = np.column_stack((curve.x, curve.y))
    return bool(LinearRing(pts).is_simple)


def is_subordinate_numeric(g_eval: Callable, f, r: float = 1.0, grid: int = BOUNDARY_SAMPLES,
                           impl=None) -> Verdict:
    """Are the values of ``g`` on |z| = r strictly inside the image of the disk under ``f``?

    The image is the polygon traced by ``f`` on |z| = 1 (retreating to
    |z| = 0.9999 when ``f`` is singular on the circle). The verdict is
    ``false`` when some sample lies outside by more than the margin tolerance,
    ``true`` when all lie inside with at least that margin, and
    ``inconclusive`` otherwise or when the polygon self-intersects.
    """
    poly = trace_curve(f, 1.0, grid)
    details = {"boundary_radius": poly.radius, "boundary_points": len(poly), "samples": grid}
    if not _is_simple(poly):
        return Verdict(INCONCLUSIVE, 0.0, {**details, "reason": "boundary polygon self-intersects"})
    theta = 2.0 * math.pi * np.arange(grid) / grid
    with np.errstate(all="ignore"):
        w = np.asarray(g_eval(r * np.exp(1j * theta)), dtype=np.complex128) * np.ones(grid)
    if not np.all(np.isfinite(w)):
        return Verdict(INCONCLUSIVE, 0.0, {**details, "reason": "g is not finite on the circle"})
    inside = kernels.even_odd_contains(w.real, w.imag, poly.x, poly.y, impl=impl)
    dist = kernels.min_segment_distance(w.real, w.imag, poly.x, poly.y, impl=impl)
    outside = ~inside
    if np.any(outside & (dist >= MARGIN_TOL)):
        worst = float(dist[outside].max())
        return Verdict(FALSE, worst, {**details, "outside_samples": int(outside.sum())})
    margin = float(dist.min())
    if np.all(inside) and margin >= MARGIN_TOL:
        return Verdict(TRUE, margin, details)
    return Verdict(INCONCLUSIVE, margin, {**details, "reason": "samples within tolerance of the boundary"})


def gauss_legendre_mean(h: Callable, z: np.ndarray, nodes: int = GL_NODES) -> np.ndarray:
    """(1/z) times the integral of h from 0 to z, as the integral of h(s z) over s in [0, 1]."""
    x, wts = np.polynomial.legendre.leggauss(nodes)
    s = 0.5 * (x + 1.0)
    z = np.asarray(z, dtype=np.complex128)
    vals = np.asarray(h(np.multiply.outer(s, z)), dtype=np.complex128)
    return 0.5 * np.tensordot(wts, vals, axes=1)


def _h_series(h, order: int) -> PowerSeries:
    if isinstance(h, PowerSeries):
        return h
    # sampled close to the unit circle so evaluations at |z| <= 0.9 stay accurate
    return series_from_function(h, order, radius=0.95)


def convexity_minima(hs: PowerSeries, radii=(0.25, 0.5, 0.75, 0.9), points: int = 512) -> dict:
    """Minimum of Re(1 + z h''/h) and Re(1 + z h''/h') over circles of the given radii."""
    d1 = series_derivative(hs)
    d2 = series_derivative(d1)
    printed = series_div(d2, series_unshift(hs))  # z h''/h = h''/(h/z)
    proper = series_mul(PowerSeries.identity(hs.order), series_div(d2, d1))
    theta = 2.0 * math.pi * np.arange(points) / points
    lo_p = lo_q = math.inf
    for rad in radii:
        z = rad * np.exp(1j * theta)
        lo_p = min(lo_p, float(np.min(1.0 + series_eval(printed, z).real)))
        lo_q = min(lo_q, float(np.min(1.0 + series_eval(proper, z).real)))
    return {"printed_min": lo_p, "printed_holds": lo_p >= -0.5,
            "derivative_min": lo_q, "derivative_holds": lo_q >= -0.5,
            "radii": list(radii)}


def bulboaca_condition_check(h, f: MindaFunction, grid: int = BOUNDARY_SAMPLES,
                             order: int = DEFAULT_ORDER) -> Verdict:
    """Check (1/z) integral_0^z h  subordinate to (psi - 1)/psi numerically.

    ``h`` is a PowerSeries or a vectorized callable analytic on the closed
    disk. The mean integral uses the series when one is given and
    Gauss-Legendre quadrature along rays otherwise. The convexity hypothesis
    on h is reported in two readings, with h'' divided by h and by h'.
    """
    hs = _h_series(h, order)
    c = hs.coeffs
    if abs(c[0]) > 1e-10:
        raise SeriesError(f"h(0) must vanish, got {c[0]:.6g}")
    if abs(c[1]) <= 1e-10:
        raise SeriesError("h'(0) must be non-zero")
    if isinstance(h, PowerSeries):
        mean = series_mean_integral(h)
        g = mean.__call__
    else:
        g = lambda z: gauss_legendre_mean(h, z)
    ev = f.evaluator

    def target(z):
        p = ev(z)
        return (p - 1.0) / p

    v = is_subordinate_numeric(g, target, 1.0, grid)
    return Verdict(v.status, v.margin, {**v.details, "convexity": convexity_minima(hs)})


def probe_extremal(f: MindaFunction, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Series of the extremal F with z F'/F equal to psi reflected to its minimum side.

    For positive orientation this is psi(-z) (F(z) = -f0(-z)); for negative
    orientation psi(z) itself.
    """
    if f.orientation >= 0:
        s = f0_series(f, order)
        return PowerSeries(s.coeffs * (-1.0) ** np.arange(1, order + 2))
    return f0_series(f, order)


def sharpness_h(F: PowerSeries, r: float, alpha):
    """h(r, alpha) = (r+alpha)/(1+alpha r) + (1-alpha^2)/(1+alpha r)^2 * F(r)/F'(r)."""
    ratio = float(np.real(series_eval(F, r) / series_eval(series_derivative(F), r)))
    a = np.asarray(alpha, dtype=np.float64)
    return (r + a) / (1.0 + a * r) + (1.0 - a * a) / (1.0 + a * r) ** 2 * ratio


def majorization_sharpness_probe(f: MindaFunction, r_psi: float, epsilon: float,
                                 delta: float = 0.2, n_alpha: int = 400,
                                 order: int = DEFAULT_ORDER) -> Verdict:
    """Both sides of the majorization radius, tested with Phi(z) = (z + alpha)/(1 + alpha z).

    Outside, at r_psi + epsilon, some alpha in (1 - delta, 1) must give
    h > 1. Inside, at r_psi - epsilon, every probed alpha in [0, 1) must give
    h <= 1 + 1e-9. For epsilon = 0 only the inside check runs.
    """
    F = probe_extremal(f, order)
    fine = 1.0 - delta * np.arange(1, n_alpha + 1) / n_alpha
    coarse = np.linspace(0.0, 1.0, 201)[:-1]
    alphas = np.unique(np.concatenate((coarse, fine)))
    inner = sharpness_h(F, r_psi - epsilon, alphas)
    inner_ok = bool(np.all(inner <= 1.0 + 1e-9))
    details = {"inner_max": float(inner.max()), "inner_ok": inner_ok, "r_psi": r_psi,
               "epsilon": epsilon}
    if epsilon == 0.0:
        return Verdict(TRUE if inner_ok else FALSE, float(1.0 - inner.max()), details)
    outer = sharpness_h(F, r_psi + epsilon, fine)
    k = int(np.argmax(outer))
    outer_ok = bool(outer[k] > 1.0)
    details.update(outer_max=float(outer[k]), alpha_star=float(fine[k]), outer_ok=outer_ok)
    return Verdict(TRUE if inner_ok and outer_ok else FALSE, float(outer[k] - 1.0), details)


def schwarz_series(omega, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Series of a Schwarz function given as ``{"a": a}`` for z(z+a)/(1+conj(a) z) or ``{"m": m}`` for z^m."""
    if isinstance(omega, PowerSeries):
        return omega
    if "m" in omega:
        m = int(omega["m"])
        if not 1 <= m <= order:
            raise ValueError(f"power must lie in [1, {order}], got {m}")
        c = np.zeros(order + 1, dtype=np.complex128)
        c[m] = 1.0
        return PowerSeries(c)
    a = complex(omega["a"])
    if abs(a) > 1.0 + 1e-12:
        raise ValueError(f"|a| must be at most 1, got {abs(a)}")
    num = PowerSeries.from_coeffs([0.0, a, 1.0], order)
    den = PowerSeries.from_coeffs([1.0, a.conjugate()], order)
    return series_div(num, den)


@dataclass(frozen=True)
class CoefficientProbe:
    holds: bool
    lhs: float
    rhs: float

    def as_dict(self) -> dict:
        return {"holds": self.holds, "lhs": self.lhs, "rhs": self.rhs}


def bohr_coefficient_probe(e: ExtremalFunction, omega, r: float) -> CoefficientProbe:
    """Compare sum |b_k| r^k for g = f0(omega) against sum |a_n| r^n."""
    if not 0.0 < r <= 1.0 / 3.0 + 1e-12:
        raise ValueError(f"r must lie in (0, 1/3], got {r}")
    fs = e.series
    g = series_compose(fs, schwarz_series(omega, fs.order))
    lhs = series_abs_eval(g, r)
    rhs = series_abs_eval(fs, r)
    return CoefficientProbe(holds=lhs <= rhs * (1.0 + 1e-12), lhs=lhs, rhs=rhs)


def bohr_coefficient_stress(e: ExtremalFunction, samples: int = 100, r: float = 1.0 / 3.0,
                            seed: int = DEFAULT_SEED) -> dict:
    """Random Blaschke-type and power Schwarz maps; counts violations."""
    rng = np.random.default_rng(seed)
    violations = []
    worst = -math.inf
    for k in range(samples):
        if k % 4 == 3:
            omega = {"m": int(rng.integers(2, 6))}
        else:
            rad, ang = math.sqrt(rng.random()), 2.0 * math.pi * rng.random()
            omega = {"a": complex(rad * math.cos(ang), rad * math.sin(ang))}
        p = bohr_coefficient_probe(e, omega, r)
        worst = max(worst, p.lhs - p.rhs)
        if not p.holds:
            violations.append({k2: str(v) for k2, v in omega.items()})
    return {"samples": samples, "seed": seed, "r": r, "violations": violations,
            "max_excess": worst}
