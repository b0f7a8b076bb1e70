"""Two-sided bounds on |f'| over |z| = r for f in the starlike class of psi."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import CARDIOID_SWITCH, DomainError, MindaFunction, catalog_get
from .circle import max_modulus_on_circle, min_modulus_on_circle
from .extremal import ExtremalFunction, synth_f0

TABLE1_RADII = (("1", 1.0), ("4/5", 0.8), ("2/3", 2.0 / 3.0), ("1/2", 0.5))
# a radius in the regime where the minimum of |psi| sits at z = -r
TABLE1_SYMBOLIC_R = 0.3


@dataclass(frozen=True)
class DistortionRow:
    r: float
    theta1: float
    theta2: float
    min_modulus: float
    max_modulus: float
    lower: float
    upper: float
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "theta1": self.theta1,
            "theta2": self.theta2,
            "min_modulus": self.min_modulus,
            "max_modulus": self.max_modulus,
            "lower": self.lower,
            "upper": self.upper,
            "note": self.note,
        }


def distortion_bounds(f: MindaFunction, r: float, extremal: ExtremalFunction | None = None,
                      allow_boundary: bool = False) -> DistortionRow:
    """lower = min|psi| * (-f0(-r)/r), upper = (f0(r)/r) * max|psi| on |z| = r.

    Growth factors come from the extremal f0 (roles of +-r swap for a
    negatively oriented psi). ``allow_boundary`` admits r = 1, where f0 is
    evaluated as a boundary limit.
    """
    top = 1.0 if allow_boundary else 1.0 - 1e-300
    if not 0.0 < r <= top or (r == 1.0 and not allow_boundary):
        raise DomainError(f"distortion bounds need 0 < r < 1, got {r}")
    e = extremal or synth_f0(f)
    lo_mod = min_modulus_on_circle(f, r)
    hi_mod = max_modulus_on_circle(f, r)
    if r == 1.0:
        g_lo, g_hi = e.koebe_radius, math.nan
    else:
        g_lo, g_hi = e.growth_bounds(r)
    return DistortionRow(
        r=r,
        theta1=lo_mod.theta_star,
        theta2=hi_mod.theta_star,
        min_modulus=lo_mod.value,
        max_modulus=hi_mod.value,
        lower=lo_mod.value * g_lo / r,
        upper=g_hi / r * hi_mod.value,
        note=hi_mod.note,
    )


def table1_reproduce() -> list[dict]:
    """Lower bounds of |f'| for the cardioid class psi(z) = 1 + z e^z.

    Four numeric rows at r = 1, 4/5, 2/3, 1/2 and one row at r = 0.3 below
    the switch radius, where theta1 = pi and the bound is f0'(-r).
    """
    psi = catalog_get("cardioid")
    e = synth_f0(psi)
    rows = []
    for label, r in TABLE1_RADII:
        d = distortion_bounds(psi, r, e, allow_boundary=True)
        rows.append({"r": label, "r_value": r, "theta1": d.theta1, "modulus": d.min_modulus,
                     "lower": d.lower, "regime": "numeric"})
    r = TABLE1_SYMBOLIC_R
    assert r <= CARDIOID_SWITCH
    d = distortion_bounds(psi, r, e)
    rows.append({"r": f"{r:g}", "r_value": r, "theta1": d.theta1, "modulus": d.min_modulus,
                 "lower": d.lower, "regime": "psi(-r), f0'(-r)"})
    return rows
