"""Radius problems for Ma-Minda starlike and convex classes.

Series arithmetic, a catalog of Ma-Minda functions, extremal functions,
majorization / Bohr / distortion radii and numeric subordination probes.
"""

__version__ = "0.1.0"

from .bohr import BohrResult, bohr_radius, janowski_bohr_special
from .catalog import CATALOG_IDS, MindaFunction, all_entries, catalog_get, constant_psi, psi_eval
from .circle import CircleExtremum, max_modulus_on_circle, min_modulus_on_circle
from .distortion import distortion_bounds, table1_reproduce
from .extremal import ExtremalFunction, f0_hat, koebe_radius, synth_f0
from .kernels import BACKEND
from .radius import (
    RadiusResult,
    hallenbeck_radius,
    majorization_radius_convex,
    majorization_radius_starlike,
    product_mbeta_radius,
    product_order_radius,
    solve_least_positive_root,
    sqrt_variant_radius,
)
from .series import PowerSeries
from .special import hyp1f1, hyp2f1

__all__ = [
    "BACKEND",
    "BohrResult",
    "CATALOG_IDS",
    "CircleExtremum",
    "ExtremalFunction",
    "MindaFunction",
    "PowerSeries",
    "RadiusResult",
    "all_entries",
    "bohr_radius",
    "catalog_get",
    "constant_psi",
    "distortion_bounds",
    "f0_hat",
    "hallenbeck_radius",
    "hyp1f1",
    "hyp2f1",
    "janowski_bohr_special",
    "koebe_radius",
    "majorization_radius_convex",
    "majorization_radius_starlike",
    "max_modulus_on_circle",
    "min_modulus_on_circle",
    "product_mbeta_radius",
    "product_order_radius",
    "psi_eval",
    "solve_least_positive_root",
    "sqrt_variant_radius",
    "synth_f0",
    "table1_reproduce",
]
