import numpy as np
import pytest

from minda_radii.exprs import ExpressionError, compile_expression


def test_arithmetic_and_functions():
    fn = compile_expression("2*z + exp(z) - 1/(1 + z**2)")
    z = np.array([0.1, 0.3j, -0.2 + 0.4j])
    assert np.allclose(fn(z), 2 * z + np.exp(z) - 1 / (1 + z**2))


def test_constants_and_names():
    fn = compile_expression("f0(z/2) + pi*i", {"f0": lambda w: w * w})
    assert fn(1.0) == pytest.approx(0.25 + np.pi * 1j)


def test_constant_broadcasts():
    assert compile_expression("3")(np.zeros(4)).shape == (4,)


@pytest.mark.parametrize("text", [
    "__import__('os')",
    "z.real",
    "open('x')",
    "y + 1",
    "[z]",
    "lambda: z",
    "exp(z, base=2)",
    "2 +",
])
def test_rejected(text):
    with pytest.raises(ExpressionError):
        compile_expression(text)
