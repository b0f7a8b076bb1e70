"""Sampled images of circles |z| = r as closed polygons, with CSV and SVG output."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .catalog import DomainError, MindaFunction
from .extremal import ExtremalFunction

MIN_POINTS = 64
# radius used when the map is singular somewhere on |z| = 1
BOUNDARY_RETREAT = 0.9999
REFINE_PASSES = 4
# a segment longer than this multiple of the median segment gets a midpoint
STEP_FACTOR = 8.0
# moduli above this count as a pole hit by rounding (1 + e^{i pi} is 1e-16, not 0)
SINGULAR_MODULUS = 1e12


@dataclass(frozen=True)
class BoundaryCurve:
    theta: np.ndarray
    samples: np.ndarray
    radius: float
    closed: bool = True

    @property
    def x(self) -> np.ndarray:
        return self.samples.real

    @property
    def y(self) -> np.ndarray:
        return self.samples.imag

    def __len__(self) -> int:
        return self.samples.size

    def max_step(self) -> float:
        d = np.abs(np.diff(np.append(self.samples, self.samples[:1])))
        return float(d.max())

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["theta", "x", "y"])
            for t, z in zip(self.theta, self.samples):
                w.writerow([f"{t:.12g}", f"{z.real:.12g}", f"{z.imag:.12g}"])

    def write_svg(self, path, size: int = 512) -> None:
        """A single unstyled polyline scaled into a square view box."""
        x, y = self.x, -self.y
        lo_x, lo_y = x.min(), y.min()
        span = max(x.max() - lo_x, y.max() - lo_y) or 1.0
        k = (size - 20) / span
        pts = " ".join(f"{10 + (a - lo_x) * k:.4f},{10 + (b - lo_y) * k:.4f}" for a, b in zip(x, y))
        if self.closed:
            pts += f" {10 + (x[0] - lo_x) * k:.4f},{10 + (y[0] - lo_y) * k:.4f}"
        with open(path, "w") as fh:
            fh.write(f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}">\n')
            fh.write(f'<polyline fill="none" stroke="black" points="{pts}"/>\n</svg>\n')


def as_map(fn) -> Callable:
    """Vectorized evaluator for a catalog psi, an extremal f0 or a callable."""
    if isinstance(fn, MindaFunction):
        return fn.evaluator
    if isinstance(fn, ExtremalFunction):
        return fn
    return fn


def _eval(fn: Callable, z: np.ndarray) -> np.ndarray:
    with np.errstate(all="ignore"):
        w = np.asarray(fn(z), dtype=np.complex128) * np.ones(z.shape)
        w[np.abs(w) > SINGULAR_MODULUS] = np.nan
    return w


def trace_curve(fn, r: float = 1.0, n: int = 4096, refine: bool = True) -> BoundaryCurve:
    """Image of |z| = r under ``fn`` on a uniform theta grid over [0, 2 pi).

    When ``r`` is 1 and ``fn`` is not finite somewhere on the circle, the
    radius retreats to :data:`BOUNDARY_RETREAT`. With ``refine``, long
    segments (relative to the median) receive midpoints, a few passes deep.
    """
    if n < MIN_POINTS:
        raise ValueError(f"need at least {MIN_POINTS} points, got {n}")
    if not 0.0 < r <= 1.0:
        raise DomainError(f"radius must lie in (0, 1], got {r}")
    ev = as_map(fn)
    if isinstance(fn, MindaFunction) and fn.domain_radius < 1.0 and r >= fn.domain_radius:
        r = fn.domain_radius * BOUNDARY_RETREAT
    theta = 2.0 * math.pi * np.arange(n) / n
    w = _eval(ev, r * np.exp(1j * theta))
    if not np.all(np.isfinite(w)):
        if r < 1.0:
            raise DomainError(f"map is not finite on |z| = {r}")
        r = BOUNDARY_RETREAT
        w = _eval(ev, r * np.exp(1j * theta))
        if not np.all(np.isfinite(w)):
            raise DomainError(f"map is not finite on |z| = {r}")
    if refine:
        limit = 4 * n
        for _ in range(REFINE_PASSES):
            step = np.abs(np.diff(np.append(w, w[:1])))
            long = np.flatnonzero(step > STEP_FACTOR * np.median(step))
            if long.size == 0 or theta.size + long.size > limit:
                break
            nxt = np.append(theta[1:], 2.0 * math.pi)
            mid = 0.5 * (theta[long] + nxt[long])
            wm = _eval(ev, r * np.exp(1j * mid))
            order = np.argsort(np.concatenate((theta, mid)), kind="stable")
            theta = np.concatenate((theta, mid))[order]
            w = np.concatenate((w, wm))[order]
    return BoundaryCurve(theta=theta, samples=w, radius=r, closed=True)
