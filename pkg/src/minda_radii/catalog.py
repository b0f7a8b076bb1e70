"""Registry of Ma-Minda functions psi.

Each entry knows how to evaluate psi on (numpy arrays of) complex points,
how to expand it as a :class:`~minda_radii.series.PowerSeries`, its
orientation (sign of psi'(0)) and where the minimum of |psi| on |z| = r sits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .series import (
    DEFAULT_ORDER,
    PowerSeries,
    factorial_series,
    series_exp,
    series_pow,
    series_shift,
)

AT_MINUS_R = "at_minus_r"
AT_PLUS_R = "at_plus_r"
NUMERIC = "numeric"

SQRT2 = math.sqrt(2.0)
RL_C = 2.0 * (SQRT2 - 1.0)
# |1 + z e^z| stops being minimal at z = -r beyond the root of r^2 - 3r + 1
CARDIOID_SWITCH = (3.0 - math.sqrt(5.0)) / 2.0


class CatalogError(ValueError):
    """Unknown catalog id or parameters outside the admissible range."""


class DomainError(ValueError):
    """Evaluation requested outside where psi is defined or admissible."""


@dataclass(frozen=True, eq=False)
class MindaFunction:
    """A catalog entry for psi.

    ``evaluator`` is vectorized and unchecked; use :func:`psi_eval` for the
    checked scalar/array evaluation. ``closed_form_limit`` is the largest r
    for which ``min_modulus_form`` holds (beyond it the minimum is numeric).
    """

    id: str
    params: dict
    label: str
    evaluator: Callable
    series_builder: Callable[[int], PowerSeries]
    orientation: int
    min_modulus_form: str
    domain_radius: float = 1.0
    closed_form_limit: float = 1.0
    convex: bool = False
    real_coefficients: bool = True
    notes: dict = field(default_factory=dict)

    def __call__(self, z):
        return psi_eval(self, z)

    def series(self, order: int = DEFAULT_ORDER) -> PowerSeries:
        return self.series_builder(order)

    def modulus_form_at(self, r: float) -> str:
        if self.min_modulus_form == NUMERIC or r > self.closed_form_limit:
            return NUMERIC
        return self.min_modulus_form

    def closed_min_modulus(self, r: float) -> float:
        """psi(-r) or psi(r) according to the orientation; no validity check."""
        x = -r if self.min_modulus_form == AT_MINUS_R else r
        return float(np.real(self.evaluator(np.complex128(x))))

    @property
    def normalized(self) -> bool:
        return abs(complex(self.evaluator(np.complex128(0.0))) - 1.0) < 1e-12

    def describe(self) -> dict:
        return {
            "id": self.id,
            "params": dict(self.params),
            "label": self.label,
            "orientation": "+" if self.orientation > 0 else ("-" if self.orientation < 0 else "0"),
            "min_modulus_form": self.min_modulus_form,
            "closed_form_limit": self.closed_form_limit,
            "domain_radius": self.domain_radius,
            "convex": self.convex,
            **self.notes,
        }


def psi_eval(f: MindaFunction, z):
    """Checked evaluation of psi at ``z`` (scalar or array).

    Raises :class:`DomainError` for |z| > 1, points at or past a restricted
    entry's ``domain_radius``, and poles/branch points that give non-finite
    values.
    """
    z = np.asarray(z, dtype=np.complex128)
    mod = np.abs(z)
    if np.any(mod > 1.0 + 1e-15):
        raise DomainError(f"{f.id}: |z| must be <= 1")
    if f.domain_radius < 1.0 and np.any(mod >= f.domain_radius):
        raise DomainError(f"{f.id}: |z| must stay below domain radius {f.domain_radius:.12g}")
    with np.errstate(all="ignore"):
        w = np.asarray(f.evaluator(z), dtype=np.complex128)
    if not np.all(np.isfinite(w)):
        raise DomainError(f"{f.id}: pole or branch point reached")
    if np.ndim(z) == 0:
        w = w[()]
        if np.imag(z) == 0 and f.real_coefficients:
            return complex(w.real, 0.0)
        return complex(w)
    return w


def _poly(coeffs, order):
    return PowerSeries.from_coeffs(coeffs, order)


def _janowski_series(D, E):
    return lambda n: _poly([1.0, D], n) / _poly([1.0, E], n)


def _check(cond, msg):
    if not cond:
        raise CatalogError(msg)


def _janowski(D: float = 1.0, E: float = -1.0) -> MindaFunction:
    _check(-1.0 <= E < D <= 1.0, f"janowski needs -1 <= E < D <= 1, got D={D}, E={E}")
    return MindaFunction(
        id="janowski",
        params={"D": D, "E": E},
        label="(1+Dz)/(1+Ez)",
        evaluator=lambda z: (1 + D * z) / (1 + E * z),
        series_builder=_janowski_series(D, E),
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        convex=True,
        notes={"class": "Janowski starlike"},
    )


def _order_alpha(alpha: float = 0.0) -> MindaFunction:
    _check(0.0 <= alpha < 1.0, f"order_alpha needs 0 <= alpha < 1, got {alpha}")
    k = 1.0 - 2.0 * alpha
    return MindaFunction(
        id="order_alpha",
        params={"alpha": alpha},
        label="(1+(1-2a)z)/(1-z)",
        evaluator=lambda z: (1 + k * z) / (1 - z),
        series_builder=_janowski_series(k, -1.0),
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        convex=True,
        notes={"class": "starlike of order alpha"},
    )


def _log_cayley(n):
    # log((1+z)/(1-z)) = 2 * sum over odd k of z^k / k
    c = np.zeros(n + 1)
    k = np.arange(1, n + 1, 2)
    c[k] = 2.0 / k
    return PowerSeries(c)


def _power_eta(eta: float = 0.5) -> MindaFunction:
    _check(0.0 < eta <= 1.0, f"power_eta needs 0 < eta <= 1, got {eta}")
    return MindaFunction(
        id="power_eta",
        params={"eta": eta},
        label="((1+z)/(1-z))^eta",
        evaluator=lambda z: ((1 + z) / (1 - z)) ** eta,
        series_builder=lambda n: series_exp(_log_cayley(n) * eta),
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        convex=True,
        notes={"class": "strongly starlike of order eta"},
    )


def _rl_crescent() -> MindaFunction:
    def ev(z):
        return SQRT2 - (SQRT2 - 1.0) * np.sqrt((1 - z) / (1 + RL_C * z))

    def ser(n):
        inner = _poly([1.0, -1.0], n) / _poly([1.0, RL_C], n)
        return SQRT2 - (SQRT2 - 1.0) * series_pow(inner, 0.5)

    return MindaFunction(
        id="rl_crescent",
        params={},
        label="sqrt(2)-(sqrt(2)-1)sqrt((1-z)/(1+2(sqrt(2)-1)z))",
        evaluator=ev,
        series_builder=ser,
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        notes={"class": "left-half lemniscate of Bernoulli (RL)"},
    )


def _ab_power(a: float = 2.0, b: float = 1.0) -> MindaFunction:
    _check(a >= 1.0 and b >= 0.5, f"ab_power needs a >= 1 and b >= 1/2, got a={a}, b={b}")
    p = 1.0 / a
    scale = b**p
    return MindaFunction(
        id="ab_power",
        params={"a": a, "b": b},
        label="(b(1+z))^(1/a)",
        evaluator=lambda z: (b * (1 + z)) ** p,
        series_builder=lambda n: series_pow(_poly([1.0, 1.0], n), p) * scale,
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        convex=True,
        notes={"class": "|w^a - b| < b domain", "psi(0)": scale},
    )


def _exp() -> MindaFunction:
    return MindaFunction(
        id="exp",
        params={},
        label="e^z",
        evaluator=np.exp,
        series_builder=factorial_series,
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        convex=True,
        notes={"class": "exponential starlike"},
    )


def _crescent() -> MindaFunction:
    return MindaFunction(
        id="crescent",
        params={},
        label="z+sqrt(1+z^2)",
        evaluator=lambda z: z + np.sqrt(1 + z * z),
        series_builder=lambda n: PowerSeries.identity(n) + series_pow(_poly([1.0, 0.0, 1.0], n), 0.5),
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        notes={"class": "crescent starlike"},
    )


def _sigmoid() -> MindaFunction:
    def ser(n):
        e_neg = PowerSeries([(-1.0) ** k * math.exp(-math.lgamma(k + 1)) for k in range(n + 1)])
        return PowerSeries.constant(2.0, n) / (1.0 + e_neg)

    return MindaFunction(
        id="sigmoid",
        params={},
        label="2/(1+e^-z)",
        evaluator=lambda z: 2.0 / (1.0 + np.exp(-z)),
        series_builder=ser,
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        notes={"class": "modified sigmoid starlike"},
    )


def _sine() -> MindaFunction:
    def ser(n):
        c = np.zeros(n + 1)
        c[0] = 1.0
        for k in range(1, n + 1, 2):
            c[k] = (-1.0) ** ((k - 1) // 2) * math.exp(-math.lgamma(k + 1))
        return PowerSeries(c)

    return MindaFunction(
        id="sine",
        params={},
        label="1+sin z",
        evaluator=lambda z: 1.0 + np.sin(z),
        series_builder=ser,
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        notes={"class": "sine starlike"},
    )


def _cardioid() -> MindaFunction:
    return MindaFunction(
        id="cardioid",
        params={},
        label="1+z e^z",
        evaluator=lambda z: 1.0 + z * np.exp(z),
        series_builder=lambda n: 1.0 + series_shift(factorial_series(n)),
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        closed_form_limit=CARDIOID_SWITCH,
        notes={"class": "cardioid starlike", "switch_radius": "(3-sqrt(5))/2"},
    )


def _sqrt_plus() -> MindaFunction:
    return MindaFunction(
        id="sqrt_plus",
        params={},
        label="sqrt(1+z)",
        evaluator=lambda z: np.sqrt(1 + z),
        series_builder=lambda n: series_pow(_poly([1.0, 1.0], n), 0.5),
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        convex=True,
        notes={"class": "positively oriented square root"},
    )


def _sqrt_minus() -> MindaFunction:
    return MindaFunction(
        id="sqrt_minus",
        params={},
        label="sqrt(1-z)",
        evaluator=lambda z: np.sqrt(1 - z),
        series_builder=lambda n: series_pow(_poly([1.0, -1.0], n), 0.5),
        orientation=-1,
        min_modulus_form=AT_PLUS_R,
        convex=True,
        notes={"class": "negatively oriented square root"},
    )


def _linear(beta: float = 1.0) -> MindaFunction:
    _check(0.0 < beta <= 1.0, f"linear needs 0 < beta <= 1, got {beta}")
    return MindaFunction(
        id="linear",
        params={"beta": beta},
        label="1+beta z",
        evaluator=lambda z: 1.0 + beta * z,
        series_builder=lambda n: _poly([1.0, beta], n),
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        convex=True,
        notes={"class": "1 + beta z"},
    )


def booth_domain_radius(alpha: float) -> float:
    """Positive root of alpha r^2 + r - 1 = 0."""
    return (-1.0 + math.sqrt(1.0 + 4.0 * alpha)) / (2.0 * alpha)


def _booth(alpha: float = 0.5) -> MindaFunction:
    _check(0.0 < alpha < 1.0, f"booth needs 0 < alpha < 1, got {alpha}")
    return MindaFunction(
        id="booth",
        params={"alpha": alpha},
        label="1+z/(1-alpha z^2)",
        evaluator=lambda z: 1.0 + z / (1.0 - alpha * z * z),
        series_builder=lambda n: 1.0 + _poly([0.0, 1.0], n) / _poly([1.0, 0.0, -alpha], n),
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        domain_radius=booth_domain_radius(alpha),
        notes={"class": "Booth lemniscate starlike",
               "domain_radius_formula": "r_alpha = (-1+sqrt(1+4 alpha))/(2 alpha), root of alpha r^2 + r - 1 = 0"},
    )


def _lemniscate() -> MindaFunction:
    f = _sqrt_plus()
    return MindaFunction(
        id="lemniscate",
        params={},
        label="sqrt(1+z)",
        evaluator=f.evaluator,
        series_builder=f.series_builder,
        orientation=1,
        min_modulus_form=AT_MINUS_R,
        convex=True,
        notes={"class": "lemniscate of Bernoulli starlike"},
    )


_BUILDERS: dict[str, Callable[..., MindaFunction]] = {
    "janowski": _janowski,
    "order_alpha": _order_alpha,
    "power_eta": _power_eta,
    "rl_crescent": _rl_crescent,
    "ab_power": _ab_power,
    "exp": _exp,
    "crescent": _crescent,
    "sigmoid": _sigmoid,
    "sine": _sine,
    "cardioid": _cardioid,
    "sqrt_plus": _sqrt_plus,
    "sqrt_minus": _sqrt_minus,
    "linear": _linear,
    "booth": _booth,
    "lemniscate": _lemniscate,
}

PARAMETER_RANGES = {
    "janowski": {"D": "-1 <= E < D <= 1", "E": "-1 <= E < D <= 1"},
    "order_alpha": {"alpha": "0 <= alpha < 1"},
    "power_eta": {"eta": "0 < eta <= 1"},
    "ab_power": {"a": "a >= 1", "b": "b >= 1/2"},
    "linear": {"beta": "0 < beta <= 1"},
    "booth": {"alpha": "0 < alpha < 1"},
}

CATALOG_IDS = tuple(_BUILDERS)


def normalize_id(name: str) -> str:
    return name.strip().lower().replace("-", "_")


def catalog_get(id: str, **params) -> MindaFunction:
    """Build the catalog entry ``id`` with the given parameters.

    Unspecified parameters take their defaults (janowski D=1, E=-1;
    order_alpha alpha=0; power_eta eta=1/2; ab_power a=2, b=1; linear beta=1;
    booth alpha=1/2).
    """
    key = normalize_id(id)
    if key not in _BUILDERS:
        raise CatalogError(f"unknown catalog id {id!r}; known: {', '.join(CATALOG_IDS)}")
    try:
        return _BUILDERS[key](**{k: float(v) for k, v in params.items()})
    except TypeError as exc:
        raise CatalogError(f"bad parameters for {key}: {exc}") from None


def all_entries() -> list[MindaFunction]:
    """Every catalog entry at its default parameters."""
    return [catalog_get(k) for k in CATALOG_IDS]


def constant_psi(value: float = 1.0) -> MindaFunction:
    """psi identically equal to 1; the generator of the identity map g(z) = z.

    Not a registered catalog entry (its orientation is 0); used for degenerate
    sanity cases and for the product problems with one factor equal to z.
    """
    return MindaFunction(
        id="constant",
        params={"value": value},
        label=f"{value:g}",
        evaluator=lambda z: np.full(np.shape(z), value, dtype=np.complex128)[()],
        series_builder=lambda n: PowerSeries.constant(value, n),
        orientation=0,
        min_modulus_form=AT_MINUS_R,
        convex=True,
    )


def from_series(series: PowerSeries, id: str = "custom", orientation: int | None = None,
                min_modulus_form: str = NUMERIC) -> MindaFunction:
    """Wrap a power series as a psi evaluated by its partial sums."""
    s = series
    if orientation is None:
        b1 = s.coeffs[1].real
        orientation = int(np.sign(b1))
    return MindaFunction(
        id=id,
        params={},
        label="series",
        evaluator=s,
        series_builder=lambda n: s.truncate(n),
        orientation=orientation,
        min_modulus_form=min_modulus_form,
    )
