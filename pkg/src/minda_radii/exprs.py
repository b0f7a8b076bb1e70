"""Safe evaluation of small complex expressions such as ``f0(z/2)`` or ``0.1*z``.

Only arithmetic, numeric literals, the variable ``z``, a few constants and
whitelisted functions are accepted; everything else raises ExpressionError.
"""

from __future__ import annotations

import ast
import math
import operator
from typing import Callable

import numpy as np


class ExpressionError(ValueError):
    pass


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
_UNARY = {ast.UAdd: operator.pos, ast.USub: operator.neg}

FUNCTIONS = {
    "exp": np.exp,
    "log": np.log,
    "sqrt": np.sqrt,
    "sin": np.sin,
    "cos": np.cos,
    "tan": np.tan,
    "sinh": np.sinh,
    "cosh": np.cosh,
    "tanh": np.tanh,
    "conj": np.conj,
}
CONSTANTS = {"pi": math.pi, "e": math.e, "i": 1j, "j": 1j}


def compile_expression(text: str, names: dict[str, Callable] | None = None) -> Callable:
    """Turn ``text`` into a vectorized function of ``z``.

    ``names`` adds callables (for example ``f0`` or ``psi``) on top of the
    built-in functions.
    """
    funcs = {**FUNCTIONS, **(names or {})}
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc.msg}") from None

    def ev(node, z):
        if isinstance(node, ast.Expression):
            return ev(node.body, z)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float, complex)):
            return node.value
        if isinstance(node, ast.Name):
            if node.id == "z":
                return z
            if node.id in CONSTANTS:
                return CONSTANTS[node.id]
            raise ExpressionError(f"unknown name {node.id!r}")
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left, z), ev(node.right, z))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
            return _UNARY[type(node.op)](ev(node.operand, z))
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
            fn = funcs.get(node.func.id)
            if fn is None:
                raise ExpressionError(f"unknown function {node.func.id!r}")
            return fn(*(ev(a, z) for a in node.args))
        raise ExpressionError(f"unsupported syntax: {ast.dump(node)[:60]}")

    # validate names once on a scalar so errors surface before any sampling
    with np.errstate(all="ignore"):
        ev(tree, np.complex128(0.25))

    def fn(z):
        z = np.asarray(z, dtype=np.complex128)
        with np.errstate(all="ignore"):
            out = ev(tree, z)
        return np.asarray(out, dtype=np.complex128) * np.ones(z.shape)

    return fn
