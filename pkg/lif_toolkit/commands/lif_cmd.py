"""commands/lif_cmd.py: single-coefficient extraction by either LIF form."""
import logging
from typing import Callable, List, Optional

from lif_toolkit.algebra.rational import Rational
from lif_toolkit.config import CliConfig
from lif_toolkit.errors import LifToolkitError, PreconditionViolated
from lif_toolkit.exporters import json_exporter, plain_exporter
from lif_toolkit.validators import lif

from .utils import (
    EXIT_CROSS_CHECK, EXIT_OK, diagnose, emit, load_series, parse_bindings, report_error,
)

logger = logging.getLogger(__name__)


def _check_n(n: int, cfg: CliConfig) -> None:
    if n > cfg.order:
        raise PreconditionViolated(f"n={n} exceeds --order {cfg.order}")


def _emit_extraction(payload: dict, value: Rational, oracle: Optional[Callable[[], Rational]], cfg: CliConfig) -> int:
    """Print the value, and with a cross-check the oracle value and verdict."""
    if oracle is None:
        if cfg.format == "json":
            emit(json_exporter.export_object({**payload, "value": value}))
        else:
            emit(plain_exporter.export_value(value))
        return EXIT_OK

    expected = oracle()
    agree = value == expected
    if cfg.format == "json":
        emit(json_exporter.export_object({**payload, "value": value, "oracle": expected, "agree": agree}))
    else:
        emit("\n".join([
            f"lif: {plain_exporter.export_value(value)}",
            f"oracle: {plain_exporter.export_value(expected)}",
            f"agree: {'yes' if agree else 'no'}",
        ]))
    if not agree:
        logger.error("cross-check disagreement: lif=%s oracle=%s", value, expected)
        diagnose("error: LIF value disagrees with the compositional-inverse oracle")
        return EXIT_CROSS_CHECK
    return EXIT_OK


def cmd_lif_functional(g_expr: str, f_expr: str, n: int, cfg: CliConfig,
                       cross_check: bool = False, lets: Optional[List[str]] = None) -> int:
    """[x^n] g(f-bar) = (1/n) [x^{n-1}] g' phi^n."""
    source = None
    try:
        bindings = parse_bindings(lets, cfg.order)
        source = g_expr
        g = load_series(g_expr, cfg, bindings)
        source = f_expr
        f = load_series(f_expr, cfg, bindings)
        source = None
        _check_n(n, cfg)
        value = lif.lif_functional(g, f, n)
    except LifToolkitError as exc:
        return report_error(exc, source)
    oracle = (lambda: lif.oracle_functional(g, f, n)) if cross_check else None
    return _emit_extraction({"form": "functional", "n": n}, value, oracle, cfg)


def cmd_lif_sj(f_expr: str, n: int, l: int, cfg: CliConfig,
               cross_check: bool = False, lets: Optional[List[str]] = None) -> int:
    """[x^n] f-bar^l = (l/n) [x^{n-l}] phi^n."""
    source = None
    try:
        bindings = parse_bindings(lets, cfg.order)
        source = f_expr
        f = load_series(f_expr, cfg, bindings)
        source = None
        _check_n(n, cfg)
        value = lif.lif_schur_jabotinsky(f, n, l)
    except LifToolkitError as exc:
        return report_error(exc, source)
    oracle = (lambda: lif.oracle_schur_jabotinsky(f, n, l)) if cross_check else None
    return _emit_extraction({"form": "schur_jabotinsky", "n": n, "l": l}, value, oracle, cfg)
