import random
from fractions import Fraction

import pytest

from lif_toolkit.algebra.series import TruncatedSeries
from lif_toolkit.parsers import expression as ex
from lif_toolkit.parsers.evaluator import evaluate_text

_OPERATORS = ("neg", "add", "sub", "mul", "div", "pow", "call")
_BINARY = {"add": ex.Add, "sub": ex.Sub, "mul": ex.Mul, "div": ex.Div}


def series(*values, N=None) -> TruncatedSeries:
    return TruncatedSeries.of(values, N)


def random_ast(rng: random.Random, depth: int = 2, names=("x", "a", "b")) -> ex.Node:
    """A random expression tree drawing on every node kind, at most `depth` operators deep."""
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.4:
            return ex.Literal(Fraction(rng.randint(0, 9), rng.randint(1, 4)))
        return ex.Var(rng.choice(names))
    kind = rng.choice(_OPERATORS)
    if kind == "neg":
        return ex.Neg(random_ast(rng, depth - 1, names))
    if kind == "pow":
        return ex.Pow(random_ast(rng, depth - 1, names), rng.randint(0, 3))
    if kind == "call":
        return ex.Call(rng.choice(ex.BUILTINS), random_ast(rng, depth - 1, names))
    return _BINARY[kind](random_ast(rng, depth - 1, names), random_ast(rng, depth - 1, names))


@pytest.fixture
def rng():
    return random.Random(20240)


@pytest.fixture
def catalan_f():
    """x - x^2, whose inverse has Catalan coefficients."""
    return series(0, 1, -1, N=10)


@pytest.fixture
def cayley_f():
    """x e^{-x}, phi = e^x."""
    return evaluate_text("x * exp(-x)", 10)
