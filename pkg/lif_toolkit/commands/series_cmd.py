"""commands/series_cmd.py: coefficient listing and compositional inverse."""
from typing import List, Optional

from lif_toolkit.algebra import series as ps
from lif_toolkit.config import CliConfig
from lif_toolkit.errors import LifToolkitError

from .utils import EXIT_OK, emit_series, load_series, parse_bindings, report_error


def cmd_coeffs(expr: str, cfg: CliConfig, lets: Optional[List[str]] = None) -> int:
    try:
        bindings = parse_bindings(lets, cfg.order)
    except LifToolkitError as exc:
        return report_error(exc)
    try:
        f = load_series(expr, cfg, bindings)
    except LifToolkitError as exc:
        return report_error(exc, expr)
    emit_series(f, cfg)
    return EXIT_OK


def cmd_inverse(expr: str, cfg: CliConfig, lets: Optional[List[str]] = None) -> int:
    try:
        bindings = parse_bindings(lets, cfg.order)
    except LifToolkitError as exc:
        return report_error(exc)
    try:
        f = load_series(expr, cfg, bindings)
    except LifToolkitError as exc:
        return report_error(exc, expr)
    try:
        fbar = ps.comp_inverse(f)
    except LifToolkitError as exc:
        return report_error(exc)
    emit_series(fbar, cfg)
    return EXIT_OK
