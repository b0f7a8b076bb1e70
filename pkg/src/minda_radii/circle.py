"""Extrema of |psi| and Re psi on the circle |z| = r.

For real-coefficient psi the values at e^{i theta} and e^{-i theta} are
conjugate, so only theta in [0, pi] is searched: a uniform scan brackets the
best local extrema, each of which is polished by golden-section search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .catalog import AT_MINUS_R, NUMERIC, DomainError, MindaFunction
from .series import PowerSeries

GRID = 2048
KEEP = 3
THETA_TOL = 1e-12
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

KINDS = ("min_mod", "max_mod", "min_re", "max_re")


@dataclass(frozen=True)
class CircleExtremum:
    r: float
    theta_star: float
    value: float
    kind: str
    method: str
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "theta_star": self.theta_star,
            "value": self.value,
            "kind": self.kind,
            "method": self.method,
            "note": self.note,
        }


def golden_section(fn: Callable[[float], float], lo: float, hi: float,
                   tol: float = THETA_TOL, maxiter: int = 200) -> tuple[float, float]:
    """Minimize a unimodal ``fn`` on [lo, hi]; returns (x, fn(x))."""
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(maxiter):
        if b - a <= tol:
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = fn(d)
    x, fx = (c, fc) if fc <= fd else (d, fd)
    # the bracket ends are real candidates too (minimum on the boundary)
    for e in (lo, hi):
        if a == e or b == e:
            fe = fn(e)
            if fe < fx:
                x, fx = e, fe
    return x, fx


def _as_evaluator(fn) -> Callable:
    if isinstance(fn, MindaFunction):
        return fn.evaluator
    if isinstance(fn, PowerSeries):
        return fn.__call__
    return fn


def _objective(ev: Callable, r: float, kind: str) -> Callable:
    def values(theta):
        with np.errstate(all="ignore"):
            w = np.asarray(ev(r * np.exp(1j * np.asarray(theta, dtype=np.float64))),
                           dtype=np.complex128)
        if kind in ("min_mod", "max_mod"):
            v = np.abs(w)
        else:
            v = w.real
        sign = 1.0 if kind.startswith("min") else -1.0
        v = sign * v
        return np.where(np.isnan(v), np.inf, v)

    return values


def _scan_refine(values: Callable, grid: int, keep: int) -> tuple[float, float]:
    theta = np.linspace(0.0, math.pi, grid + 1)
    v = values(theta)
    left = np.concatenate(([np.inf], v[:-1]))
    right = np.concatenate((v[1:], [np.inf]))
    cand = np.flatnonzero((v <= left) & (v <= right))
    if cand.size == 0:  # constant objective
        cand = np.array([0])
    cand = cand[np.lexsort((theta[cand], v[cand]))][:keep]
    scalar = lambda t: float(values(np.array([t]))[0])
    best = None
    for i in cand:
        lo = theta[max(i - 1, 0)]
        hi = theta[min(i + 1, grid)]
        if not np.isfinite(v[i]):
            t, fv = float(theta[i]), float(v[i])
        else:
            t, fv = golden_section(scalar, lo, hi)
        key = (fv, t)
        if best is None or key < best:
            best = key
    # endpoints compete explicitly so a minimum sliding off theta = pi is caught
    for t in (0.0, math.pi):
        key = (scalar(t), t)
        if key < best:
            best = key
    return float(best[1]), float(best[0])


def _check_radius(f, r: float) -> None:
    if not 0.0 < r <= 1.0:
        raise DomainError(f"radius must lie in (0, 1], got {r}")
    if isinstance(f, MindaFunction) and f.domain_radius < 1.0 and r >= f.domain_radius:
        raise DomainError(
            f"{f.id}: r={r} is not below the domain radius {f.domain_radius:.12g}"
        )


def circle_extremum(fn, r: float, kind: str, grid: int = GRID, keep: int = KEEP) -> CircleExtremum:
    """Numeric extremum of |fn| or Re fn on |z| = r over theta in [0, pi].

    ``fn`` may be a :class:`MindaFunction`, a :class:`PowerSeries` or any
    vectorized callable with real Taylor coefficients.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    _check_radius(fn, r)
    values = _objective(_as_evaluator(fn), r, kind)
    theta, v = _scan_refine(values, grid, keep)
    value = v if kind.startswith("min") else -v
    return CircleExtremum(r=r, theta_star=theta, value=float(value), kind=kind, method="grid_refined")


def min_modulus_on_circle(f, r: float, numeric: bool = False, grid: int = GRID) -> CircleExtremum:
    """Minimum of |psi| on |z| = r.

    Catalog entries whose minimum sits on the real axis at this radius get
    the closed form psi(-r) (theta = pi) or psi(r) (theta = 0), unless
    ``numeric`` is set.
    """
    _check_radius(f, r)
    if not numeric and isinstance(f, MindaFunction) and f.modulus_form_at(r) != NUMERIC:
        theta = math.pi if f.min_modulus_form == AT_MINUS_R else 0.0
        return CircleExtremum(r=r, theta_star=theta, value=f.closed_min_modulus(r),
                              kind="min_mod", method="closed_form")
    return circle_extremum(f, r, "min_mod", grid=grid)


def max_modulus_on_circle(f, r: float, grid: int = GRID) -> CircleExtremum:
    """Maximum of |psi| on |z| = r; ``note`` flags a maximizer off theta = 0."""
    ext = circle_extremum(f, r, "max_mod", grid=grid)
    if ext.theta_star > 1e-9:
        return CircleExtremum(ext.r, ext.theta_star, ext.value, ext.kind, ext.method,
                              note="maximum not at theta=0")
    return ext


def min_re_on_circle(f, r: float, grid: int = GRID) -> CircleExtremum:
    return circle_extremum(f, r, "min_re", grid=grid)


def max_re_on_circle(f, r: float, grid: int = GRID) -> CircleExtremum:
    return circle_extremum(f, r, "max_re", grid=grid)
