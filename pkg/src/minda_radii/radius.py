"""Radius problems as residual functions and their least positive roots.

Every residual k(r) here satisfies k(0+) > 0, so the least positive root is
the first sign change of a left-to-right scan, polished by Brent's method.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import optimize

from .catalog import AT_MINUS_R, AT_PLUS_R, NUMERIC, MindaFunction
from .circle import circle_extremum, min_modulus_on_circle
from .series import (
    PowerSeries,
    adaptive_series,
    series_exp,
    series_integrate_kernel,
    series_mean_integral,
)
from .special import janowski_q_minus

ROOT_TOL = 1e-10
SCAN_POINTS = 512
CERTIFY_POINTS = 4096
# first scan abscissa, as a fraction of hi
SCAN_START = 1e-6
# residuals built from a psi with m_r <= 1 are negative past sqrt(2) - 1
CONVEX_HI = 0.5
DOMAIN_MARGIN = 1e-9
AXIS_CHECK_RADII = 8


class RootNotFound(ArithmeticError):
    """No sign change of the residual on the scanned interval."""


class ConditionError(ValueError):
    """A hypothesis of a radius problem fails for the given psi."""


@dataclass(frozen=True)
class RootSolve:
    root: float
    iterations: int
    bracket: tuple[float, float]


@dataclass(frozen=True)
class RadiusResult:
    problem: dict
    root: float
    bracket: tuple[float, float]
    residual_at_root: float
    tolerance: float
    iterations: int
    capped: bool
    scale: float = 1.0
    residual: Callable[[float], float] | None = field(default=None, repr=False, compare=False)

    def as_dict(self) -> dict:
        return {
            "problem": self.problem,
            "root": self.root,
            "bracket": list(self.bracket),
            "residual_at_root": self.residual_at_root,
            "tolerance": self.tolerance,
            "iterations": self.iterations,
            "capped": self.capped,
        }

    def certify(self, points: int = CERTIFY_POINTS) -> bool:
        """No sign change of the residual before the root on a finer scan."""
        if self.residual is None:
            raise ValueError("result carries no residual to certify")
        return certify_least_root(self.residual, self.root, self.tolerance, points)


def _scan(residual: Callable[[float], float], lo: float, hi: float, points: int):
    grid = np.concatenate(([lo], lo + (hi - lo) * np.arange(1, points + 1) / points))
    first = residual(float(grid[0]))
    if not first > 0.0:
        raise RootNotFound(f"residual({grid[0]:.3g}) = {first:.6g} is not positive")
    prev_x, prev_v = float(grid[0]), first
    for x in grid[1:]:
        x = float(x)
        v = residual(x)
        if not math.isfinite(v):
            raise RootNotFound(f"residual is not finite at r={x:.12g}")
        if v <= 0.0:
            return prev_x, x, v
        prev_x, prev_v = x, v
    return None


def solve_least_positive_root(residual: Callable[[float], float], hi: float,
                              tol: float = ROOT_TOL, points: int = SCAN_POINTS) -> RootSolve:
    """Least positive root of ``residual`` on (0, hi].

    The residual must be positive near 0. A ``points``-point scan finds the
    first sign change, then Brent's method polishes it to |dr| < tol/100.
    """
    if not hi > 0.0:
        raise ValueError(f"hi must be positive, got {hi}")
    hit = _scan(residual, SCAN_START * hi, hi, points)
    if hit is None:
        raise RootNotFound(f"no root in (0,{hi:.12g}]")
    a, b, vb = hit
    if vb == 0.0:
        return RootSolve(b, 0, (a, b))
    root, info = optimize.brentq(residual, a, b, xtol=tol * 1e-2, rtol=4 * np.finfo(float).eps,
                                 maxiter=200, full_output=True)
    return RootSolve(float(root), int(info.iterations), (a, b))


def certify_least_root(residual: Callable[[float], float], root: float, tol: float = ROOT_TOL,
                       points: int = CERTIFY_POINTS) -> bool:
    """True when ``residual`` keeps its sign on (1e-6, root - tol)."""
    end = root - tol
    if end <= SCAN_START:
        return True
    grid = np.linspace(SCAN_START, end, points)
    signs = np.sign([residual(float(x)) for x in grid])
    return bool(np.all(signs == signs[0]) and signs[0] > 0)


def _finish(problem: dict, residual: Callable[[float], float], hi: float, tol: float,
            cap: float | None = None) -> RadiusResult:
    scale = max(1.0, abs(residual(hi / 2.0)))
    try:
        sol = solve_least_positive_root(residual, hi, tol)
    except RootNotFound:
        if cap is None:
            raise
        # residual stays positive up to hi: the cap is the answer
        return RadiusResult(problem, cap, (SCAN_START * hi, hi), residual(hi), tol, 0, True,
                            scale, residual)
    root, capped = sol.root, False
    if cap is not None and root >= cap:
        root, capped = cap, True
    res = residual(root)
    return RadiusResult(problem, root, sol.bracket, res, tol, sol.iterations, capped, scale, residual)


def _describe(psi) -> dict:
    if isinstance(psi, MindaFunction):
        return {"id": psi.id, "params": dict(psi.params)}
    return {"id": "series", "params": {"order": psi.order}}


def _upper(*psis: MindaFunction) -> float:
    rad = min(p.domain_radius for p in psis)
    if rad < 1.0:
        return rad - DOMAIN_MARGIN
    with np.errstate(all="ignore"):
        ends = [p.evaluator(np.array([-1.0 + 0j, 1.0 + 0j])) for p in psis]
    # a pole on the unit circle: stop just short of it
    return 1.0 if all(np.all(np.isfinite(e)) for e in ends) else 1.0 - DOMAIN_MARGIN


def _starlike_modulus(f: MindaFunction) -> Callable[[float], float]:
    def m(r: float) -> float:
        if f.modulus_form_at(r) != NUMERIC:
            return f.closed_min_modulus(r)
        return min_modulus_on_circle(f, r, numeric=True).value

    return m


def majorization_radius_starlike(f: MindaFunction, tol: float = ROOT_TOL) -> RadiusResult:
    """Least positive root of (1 - r^2) m_r - 2r, m_r = min |psi| on |z| = r.

    For a psi defined only on |z| < r_a (Booth) the result is min(r_a, r_0).
    """
    m = _starlike_modulus(f)
    hi = _upper(f)

    def residual(r: float) -> float:
        return (1.0 - r * r) * m(r) - 2.0 * r

    problem = {"kind": "majorize-starlike", "psi": [_describe(f)], "params": {},
               "m_r": f.min_modulus_form}
    cap = f.domain_radius if f.domain_radius < 1.0 else None
    return _finish(problem, residual, hi, tol, cap)


def _phi_series(phi, order: int) -> PowerSeries:
    if isinstance(phi, PowerSeries):
        return phi.truncate(order) if order <= phi.order else PowerSeries.from_coeffs(phi.coeffs, order)
    return phi.series(order)


def briot_bouquet_psi(phi, r: float = CONVEX_HI, tol: float = 1e-14) -> PowerSeries:
    """psi = h / integral(h(t)/t) with h = z exp(integral (phi - 1)/t).

    psi solves psi + z psi'/psi = phi; both h and the integral carry a
    factor z, which cancels, leaving exp(K) / mean(exp(K)).
    """
    def build(n):
        e = series_exp(series_integrate_kernel(_phi_series(phi, n)))
        return e / series_mean_integral(e)

    return adaptive_series(build, r, tol)


def hallenbeck_psi(phi, r: float = CONVEX_HI, tol: float = 1e-14) -> PowerSeries:
    """(1/z) times the integral of phi from 0 to z."""
    return adaptive_series(lambda n: series_mean_integral(_phi_series(phi, n)), r, tol)


def axis_form(psi, kind: str, hi: float, samples: int = AXIS_CHECK_RADII,
              tol: float = 1e-10) -> str:
    """Where the circle extremum ``kind`` of ``psi`` sits on (0, hi].

    Returns AT_MINUS_R or AT_PLUS_R when the numeric extremum equals the real
    axis value at every sampled radius, NUMERIC otherwise.
    """
    ev = psi.evaluator if isinstance(psi, MindaFunction) else psi
    use_re = kind.endswith("re")
    radii = hi * np.arange(1, samples + 1) / samples
    found = None
    for r in radii:
        ext = circle_extremum(psi, float(r), kind)
        hits = []
        for form, x in ((AT_MINUS_R, -r), (AT_PLUS_R, r)):
            w = complex(ev(np.complex128(x)))
            v = w.real if use_re else abs(w)
            if abs(v - ext.value) <= tol * max(1.0, abs(v)):
                hits.append(form)
        if not hits:
            return NUMERIC
        if found is None:
            found = set(hits)
        else:
            found &= set(hits)
            if not found:
                return NUMERIC
    return AT_MINUS_R if AT_MINUS_R in found else AT_PLUS_R


def _extremum_fn(psi: PowerSeries, kind: str, hi: float) -> tuple[Callable[[float], float], str]:
    form = axis_form(psi, kind, hi)
    use_re = kind.endswith("re")
    if form == NUMERIC:
        return (lambda r: circle_extremum(psi, r, kind).value), NUMERIC
    sign = -1.0 if form == AT_MINUS_R else 1.0

    def axis(r: float) -> float:
        w = complex(psi(sign * r))
        return w.real if use_re else abs(w)

    return axis, form


def _janowski_de(phi) -> tuple[float, float] | None:
    if not isinstance(phi, MindaFunction):
        return None
    if phi.id == "janowski":
        return phi.params["D"], phi.params["E"]
    if phi.id == "order_alpha":
        return 1.0 - 2.0 * phi.params["alpha"], -1.0
    if phi.id == "linear":
        return phi.params["beta"], 0.0
    return None


def majorization_radius_convex(phi, tol: float = ROOT_TOL) -> RadiusResult:
    """Majorization radius for the class whose convex generator is ``phi``.

    The starlike generator psi is the Briot-Bouquet solution of phi. For
    Janowski phi with E < 0 and 1 + D/E >= 0, or with E = 0, min |psi| is
    1/q(-r) with q a Gauss or Kummer hypergeometric function; otherwise the
    minimum comes from the series of psi.
    """
    de = _janowski_de(phi)
    if de is not None and (de[1] == 0.0 or (de[1] < 0.0 and 1.0 + de[0] / de[1] >= 0.0)):
        D, E = de

        def m(r: float) -> float:
            return 1.0 / janowski_q_minus(D, E, r)

        method, hi = "hypergeometric", 1.0
    else:
        psi = briot_bouquet_psi(phi)
        m, method = _extremum_fn(psi, "min_mod", CONVEX_HI)
        hi = CONVEX_HI

    def residual(r: float) -> float:
        return (1.0 - r * r) * m(r) - 2.0 * r

    problem = {"kind": "majorize-convex", "psi": [_describe(phi)], "params": {}, "m_r": method}
    return _finish(problem, residual, hi, tol)


def hallenbeck_radius(phi, tol: float = ROOT_TOL) -> RadiusResult:
    """Least positive root of (1 - r^2) min Re psi - 2r for psi = (1/z) integral phi."""
    psi = hallenbeck_psi(phi)
    m, method = _extremum_fn(psi, "min_re", CONVEX_HI)

    def residual(r: float) -> float:
        return (1.0 - r * r) * m(r) - 2.0 * r

    problem = {"kind": "hallenbeck", "psi": [_describe(phi)], "params": {}, "m_r": method}
    return _finish(problem, residual, CONVEX_HI, tol)


def sqrt_variant_radius(phi, tol: float = ROOT_TOL) -> RadiusResult:
    """Least positive root of (1 - r^2) min |psi|^(1/2) - 2r, psi = (1/z) integral phi."""
    psi = hallenbeck_psi(phi)
    m, method = _extremum_fn(psi, "min_mod", CONVEX_HI)

    def residual(r: float) -> float:
        return (1.0 - r * r) * math.sqrt(m(r)) - 2.0 * r

    problem = {"kind": "sqrt-variant", "psi": [_describe(phi)], "params": {}, "m_r": method}
    return _finish(problem, residual, CONVEX_HI, tol)


def _require_axis(psi: MindaFunction, kind: str, sign: float) -> None:
    hi = _upper(psi)
    for r in hi * np.array([0.1, 0.3, 0.5, 0.7, 0.9]):
        ext = circle_extremum(psi, float(r), kind)
        axis = float(np.real(psi.evaluator(np.complex128(sign * r))))
        if abs(ext.value - axis) > 1e-9 * max(1.0, abs(axis)):
            where = "psi(r)" if sign > 0 else "psi(-r)"
            raise ConditionError(
                f"{psi.id}: {kind.replace('_', ' ')} of psi on |z|={r:.3g} is {ext.value:.12g}, "
                f"not {where} = {axis:.12g}"
            )


def product_mbeta_radius(psi1: MindaFunction, psi2: MindaFunction, beta: float,
                         tol: float = ROOT_TOL) -> RadiusResult:
    """Radius where Re of zF'/F stays below beta for the product F = f g / z.

    Needs max Re psi_i on |z| = r at psi_i(r). Root of
    psi1(r) + psi2(r) - 1 - beta, capped at 1.
    """
    if not beta > 1.0:
        raise ConditionError(f"beta must exceed 1, got {beta}")
    for p in (psi1, psi2):
        _require_axis(p, "max_re", 1.0)

    def residual(r: float) -> float:
        return 1.0 + beta - float(np.real(psi1.evaluator(np.complex128(r)) + psi2.evaluator(np.complex128(r))))

    problem = {"kind": "product-mbeta", "psi": [_describe(psi1), _describe(psi2)],
               "params": {"beta": beta}, "m_r": AT_PLUS_R}
    return _finish(problem, residual, _upper(psi1, psi2), tol, cap=1.0)


def product_order_radius(psi1: MindaFunction, psi2: MindaFunction, gamma: float,
                         tol: float = ROOT_TOL) -> RadiusResult:
    """Radius of starlikeness of order gamma for F = f g / z.

    Needs min Re psi_i on |z| = r at psi_i(-r). Root of
    psi1(-r) + psi2(-r) - 1 - gamma, capped at 1.
    """
    if not 0.0 <= gamma < 1.0:
        raise ConditionError(f"gamma must lie in [0, 1), got {gamma}")
    for p in (psi1, psi2):
        _require_axis(p, "min_re", -1.0)

    def residual(r: float) -> float:
        w = psi1.evaluator(np.complex128(-r)) + psi2.evaluator(np.complex128(-r))
        return float(np.real(w)) - 1.0 - gamma

    problem = {"kind": "product-order", "psi": [_describe(psi1), _describe(psi2)],
               "params": {"gamma": gamma}, "m_r": AT_MINUS_R}
    return _finish(problem, residual, _upper(psi1, psi2), tol, cap=1.0)
