"""
parsers/evaluator.py
Evaluates an expression AST to a TruncatedSeries.

Errors raised while evaluating a node carry the span of the innermost node
that failed, so the CLI can point at the offending sub-expression.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Optional

from lif_toolkit.algebra import series as ps
from lif_toolkit.algebra.series import TruncatedSeries
from lif_toolkit.errors import CompositionRequiresNonunit, LifToolkitError, PreconditionViolated, UnboundName
from lif_toolkit.parsers import expression as ex
from lif_toolkit.validators import lif

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvalContext:
    """Truncation N plus optional name bindings; every binding must reach N."""

    truncation: int
    bindings: Mapping[str, TruncatedSeries] = field(default_factory=dict)

    def __post_init__(self):
        if self.truncation < 0:
            raise PreconditionViolated(f"truncation must be >= 0, got {self.truncation}")
        for name, value in self.bindings.items():
            if name == "x" or name in ex.BUILTINS:
                raise PreconditionViolated(f"cannot rebind reserved name {name!r}")
            if value.truncation < self.truncation:
                raise PreconditionViolated(
                    f"binding {name!r} is truncated at {value.truncation}, below {self.truncation}"
                )

    def lookup(self, name: str) -> Optional[TruncatedSeries]:
        value = self.bindings.get(name)
        return None if value is None else ps.truncate(value, self.truncation)


def exp_series(truncation: int) -> TruncatedSeries:
    """sum x^k / k!"""
    return TruncatedSeries(tuple(Fraction(1, math.factorial(k)) for k in range(truncation + 1)))


def log1p_series(truncation: int) -> TruncatedSeries:
    """sum_{k>=1} (-1)^{k+1} x^k / k"""
    return TruncatedSeries((Fraction(0),) + tuple(
        Fraction((-1) ** (k + 1), k) for k in range(1, truncation + 1)
    ))


def _compose_builtin(outer: TruncatedSeries, arg: TruncatedSeries, name: str) -> TruncatedSeries:
    if arg.coeffs[0] != 0:
        raise CompositionRequiresNonunit(f"{name}(f) needs f_0 = 0")
    return ps.compose(outer, arg)


_CALLS = {
    "exp":     lambda f: _compose_builtin(exp_series(f.truncation), f, "exp"),
    "log1p":   lambda f: _compose_builtin(log1p_series(f.truncation), f, "log1p"),
    "inverse": ps.comp_inverse,
    "xoverf":  lif.phi_from_f,
}


def _variable(name: str, ctx: EvalContext) -> TruncatedSeries:
    if name == "x":
        if ctx.truncation == 0:
            return ps.zero(0)
        return ps.monomial(1, ctx.truncation)
    bound = ctx.lookup(name)
    if bound is None:
        raise UnboundName(f"no binding for {name!r}")
    return bound


def _eval(node: ex.Node, ctx: EvalContext) -> TruncatedSeries:
    try:
        if isinstance(node, ex.Literal):
            return ps.constant(node.value, ctx.truncation)
        if isinstance(node, ex.Var):
            return _variable(node.name, ctx)
        if isinstance(node, ex.Neg):
            return ps.neg(_eval(node.operand, ctx))
        if isinstance(node, ex.Pow):
            return ps.power(_eval(node.base, ctx), node.exponent)
        if isinstance(node, ex.Call):
            return _CALLS[node.name](_eval(node.arg, ctx))
        if isinstance(node, ex.BinaryOp):
            left = _eval(node.left, ctx)
            right = _eval(node.right, ctx)
            if isinstance(node, ex.Add):
                return ps.add(left, right)
            if isinstance(node, ex.Sub):
                return ps.sub(left, right)
            if isinstance(node, ex.Mul):
                return ps.mul(left, right)
            return ps.divide(left, right)
    except LifToolkitError as exc:
        if exc.span is None:
            exc.span = node.span
        raise
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(ast: ex.Node, ctx: EvalContext) -> TruncatedSeries:
    return _eval(ast, ctx)


def evaluate_text(source: str, truncation: int, bindings: Optional[Dict[str, TruncatedSeries]] = None) -> TruncatedSeries:
    ast = ex.parse(source)
    logger.debug("parsed %r as %s", source, ex.to_source(ast))
    return evaluate(ast, EvalContext(truncation, bindings or {}))
