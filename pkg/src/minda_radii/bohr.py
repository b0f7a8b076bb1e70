"""Bohr radius of the subordination class of f0 and the Janowski special cases."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .catalog import CatalogError, MindaFunction
from .extremal import ExtremalFunction, f0_hat, synth_f0
from .radius import ROOT_TOL, RadiusResult, RootNotFound, _finish, solve_least_positive_root

BOHR_CAP = 1.0 / 3.0


@dataclass(frozen=True)
class BohrResult:
    psi_id: str
    koebe: float
    koebe_method: str
    root_r0: float
    bohr_radius: float
    sharp_flag: bool
    root_f0: float | None
    hat_equals_f0: bool
    iterations: int
    tolerance: float

    def as_dict(self) -> dict:
        return {
            "psi": self.psi_id,
            "koebe": self.koebe,
            "koebe_method": self.koebe_method,
            "root_r0": self.root_r0,
            "root_f0": self.root_f0,
            "bohr_radius": self.bohr_radius,
            "sharp_flag": self.sharp_flag,
            "hat_equals_f0": self.hat_equals_f0,
            "iterations": self.iterations,
            "tolerance": self.tolerance,
        }


def _nonnegative(e: ExtremalFunction) -> bool:
    c = e.series.coeffs
    return bool(np.all(c.real >= -1e-14) and np.all(np.abs(c.imag) <= 1e-14))


def bohr_radius(f, tol: float = ROOT_TOL) -> BohrResult:
    """r_b = min(r0, 1/3), where r0 is the least root of f0_hat(r) = r*.

    ``root_f0`` is the least root of f0(r) = r* on (0, r*]; it equals r0 when
    every Taylor coefficient of f0 is non-negative and is None when f0 never
    reaches r* there.
    """
    e = f if isinstance(f, ExtremalFunction) else synth_f0(f)
    rk = e.koebe_radius
    sol = solve_least_positive_root(lambda r: rk - f0_hat(e, r), rk, tol)
    try:
        along = solve_least_positive_root(lambda r: rk - float(np.real(e(r))), rk, tol).root
    except RootNotFound:
        along = None
    return BohrResult(
        psi_id=e.psi_id,
        koebe=rk,
        koebe_method=e.koebe_method,
        root_r0=sol.root,
        bohr_radius=min(sol.root, BOHR_CAP),
        sharp_flag=sol.root > BOHR_CAP,
        root_f0=along,
        hat_equals_f0=_nonnegative(e),
        iterations=sol.iterations,
        tolerance=tol,
    )


def janowski_bohr_hypothesis(D: float, E: float) -> None:
    """Raise CatalogError naming the inequality that fails, if any."""
    if not (-1.0 <= E < D <= 1.0):
        raise CatalogError(f"need -1 <= E < D <= 1, got D={D}, E={E}")
    if E == 0.0:
        bound = 0.75 * math.log(3.0)
        # tolerate rounding when D is given as (3/4) log 3
        if D < bound * (1.0 - 1e-15):
            raise CatalogError(f"E=0 needs D >= (3/4) log 3 = {bound:.12g}, got D={D}")
        return
    p = (D - E) / E
    left, right = 3.0 * (1.0 - E) ** p, (1.0 + E / 3.0) ** p
    if left > right * (1.0 + 1e-15):
        raise CatalogError(
            f"need 3(1-E)^p <= (1+E/3)^p with p=(D-E)/E={p:.12g}; got {left:.12g} > {right:.12g}"
        )


def janowski_bohr_special(D: float, E: float, tol: float = ROOT_TOL) -> RadiusResult:
    """Bohr radius of the Janowski class when the 1/3 cap is not active.

    Root of 1 - r e^{D(1+r)} for E = 0, and of (1-E)^p - r(1+Er)^p with
    p = (D-E)/E otherwise. The hypothesis places the root in (0, 1/3].
    """
    janowski_bohr_hypothesis(D, E)
    if E == 0.0:
        def residual(r: float) -> float:
            return 1.0 - r * math.exp(D * (1.0 + r))
    else:
        p = (D - E) / E
        lhs = (1.0 - E) ** p

        def residual(r: float) -> float:
            return lhs - r * (1.0 + E * r) ** p

    problem = {"kind": "janowski-bohr", "psi": [{"id": "janowski", "params": {"D": D, "E": E}}],
               "params": {}, "sharp": True}
    # the hypothesis gives residual(1/3) <= 0 up to rounding
    return _finish(problem, residual, BOHR_CAP * (1.0 + 1e-9), tol)


def bohr_problem(psi: MindaFunction, tol: float = ROOT_TOL) -> BohrResult:
    return bohr_radius(psi, tol)
