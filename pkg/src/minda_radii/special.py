"""Gauss 2F1 and Kummer 1F1 by direct power-series summation.

Only real parameters and arguments are supported. The arguments that occur
in the Janowski radius problems stay well inside |x| < 1, so no
transformation formulas are used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

MAX_TERMS = 10_000
DEFAULT_TOL = 1e-12


class HypergeometricError(ArithmeticError):
    """Invalid parameters or a series that did not converge within MAX_TERMS."""


@dataclass(frozen=True)
class HypergeometricQuery:
    a: float
    b: float
    c: float
    x: float
    tol: float = DEFAULT_TOL


def _check_c(c: float) -> None:
    if c <= 0 and c == math.floor(c):
        raise HypergeometricError(f"c = {c} is a non-positive integer")


def _sum(ratio, x: float, tol: float, limit: float) -> float:
    # ratio(k) gives t_{k+1}/t_k without the factor x; ``limit`` is the
    # k -> infinity limit of |ratio(k) x|, which bounds the tail ratios when
    # they approach it from below
    total = term = 1.0
    for k in range(MAX_TERMS):
        rho = ratio(k) * x
        term *= rho
        total += term
        if term == 0.0:
            return total
        # geometric tail bound once successive ratios have settled below 1
        nxt = max(abs(ratio(k + 1) * x), limit)
        if nxt < 1.0 and abs(term) * nxt / (1.0 - nxt) <= tol * abs(total):
            return total
    raise HypergeometricError(f"no convergence within {MAX_TERMS} terms (x={x})")


def gauss_2f1(q: HypergeometricQuery) -> float:
    """2F1(a, b; c; x) for |x| < 1."""
    _check_c(q.c)
    if not abs(q.x) < 1.0:
        raise HypergeometricError(f"Gauss series needs |x| < 1, got {q.x}")
    a, b, c = q.a, q.b, q.c
    return _sum(lambda k: (a + k) * (b + k) / ((c + k) * (k + 1)), q.x, q.tol, abs(q.x))


def kummer_1f1(q: HypergeometricQuery) -> float:
    """1F1(a; c; x); the ``b`` field of the query is ignored."""
    _check_c(q.c)
    a, c = q.a, q.c
    return _sum(lambda k: (a + k) / ((c + k) * (k + 1)), q.x, q.tol, 0.0)


def hyp2f1(a: float, b: float, c: float, x: float, tol: float = DEFAULT_TOL) -> float:
    return gauss_2f1(HypergeometricQuery(a, b, c, x, tol))


def hyp1f1(a: float, c: float, x: float, tol: float = DEFAULT_TOL) -> float:
    return kummer_1f1(HypergeometricQuery(a, 0.0, c, x, tol))


def janowski_q_minus(D: float, E: float, r: float) -> float:
    """q(-r) = 1/psi(-r) for the Briot-Bouquet solution psi of phi = (1+Dz)/(1+Ez).

    For E != 0 this is 2F1(1 - D/E, 1; 2; -Er/(1-Er)); for E = 0 it is
    1F1(1; 2; Dr).
    """
    if E == 0.0:
        return hyp1f1(1.0, 2.0, D * r)
    return hyp2f1(1.0 - D / E, 1.0, 2.0, -E * r / (1.0 - E * r))
