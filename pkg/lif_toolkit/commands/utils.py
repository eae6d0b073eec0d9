"""
commands/utils.py
Shared helpers for every command: exit codes, expression loading, output
and diagnostics. Import from here.
"""
import logging
import sys
from typing import Dict, Iterable, Optional

from lif_toolkit.algebra.series import TruncatedSeries
from lif_toolkit.config import CliConfig
from lif_toolkit.errors import LifToolkitError, PreconditionViolated
from lif_toolkit.exporters import json_exporter, plain_exporter
from lif_toolkit.parsers.evaluator import evaluate_text

logger = logging.getLogger(__name__)

# ── Exit codes ────────────────────────────────────────────────────────────────
EXIT_OK           = 0
EXIT_VERIFY_FAIL  = 1
EXIT_USAGE        = 2
EXIT_CROSS_CHECK  = 3


# ── Output ────────────────────────────────────────────────────────────────────

def emit(text: str) -> None:
    """Results go to standard output."""
    if text:
        print(text, file=sys.stdout)


def diagnose(message: str) -> None:
    """Diagnostics go to standard error."""
    print(message, file=sys.stderr)


def report_error(exc: LifToolkitError, source: Optional[str] = None) -> int:
    """Render an input error with a caret under its span and return the usage exit code."""
    logger.debug("command failed", exc_info=exc)
    diagnose(f"error: {exc}")
    if source is not None and exc.span is not None:
        start, end = exc.span
        start = max(0, min(start, len(source)))
        end = max(start + 1, min(end, len(source)))
        diagnose(f"  {source}")
        diagnose("  " + " " * start + "^" * (end - start))
    return EXIT_USAGE


def emit_series(f: TruncatedSeries, cfg: CliConfig) -> None:
    if cfg.format == "json":
        emit(json_exporter.export_series(f))
    else:
        emit(plain_exporter.export_series(f))


# ── Expression loading ────────────────────────────────────────────────────────

def parse_bindings(items: Optional[Iterable[str]], truncation: int) -> Dict[str, TruncatedSeries]:
    """Turn repeated NAME=EXPR flags into bindings; later bindings may use earlier ones."""
    bindings: Dict[str, TruncatedSeries] = {}
    for item in items or []:
        name, sep, source = item.partition("=")
        name = name.strip()
        if not sep or not name.isidentifier():
            raise PreconditionViolated(f"binding must look like NAME=EXPR, got {item!r}")
        bindings[name] = evaluate_text(source, truncation, dict(bindings))
    return bindings


def load_series(source: str, cfg: CliConfig, bindings: Optional[Dict[str, TruncatedSeries]] = None) -> TruncatedSeries:
    return evaluate_text(source, cfg.order, bindings)
