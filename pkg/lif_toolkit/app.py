"""
app.py: lif-toolkit command line entry point.

Structure:
    app.py                  this file (argument parsing + wiring only)
    config.py               CliConfig
    algebra/                rational coefficients, truncated series
    parsers/                expression language: parse + evaluate
    validators/             LIF extraction, identity checks, seeded suite
    exporters/              plain and JSON output
    commands/
        __init__.py         re-exports all cmd_*() functions
        utils.py            exit codes, shared loaders, diagnostics
        series_cmd.py       coeffs, inverse
        lif_cmd.py          lif-functional, lif-sj
        verify_cmd.py       verify
        gallery_cmd.py      gallery
"""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from lif_toolkit.commands import (
    cmd_coeffs,
    cmd_gallery,
    cmd_inverse,
    cmd_lif_functional,
    cmd_lif_sj,
    cmd_verify,
)
from lif_toolkit.commands.utils import EXIT_USAGE, diagnose
from lif_toolkit.config import DEFAULT_ORDER, DEFAULT_TRIALS, CliConfig
from lif_toolkit.validators.suite import CHECK_GROUPS

logger = logging.getLogger("lif_toolkit")


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=DEFAULT_ORDER, help="truncation order N")
    common.add_argument("--format", choices=["plain", "json"], default="plain")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    common.add_argument("--verbose", action="store_true", help="log progress to standard error")
    common.add_argument("--debug", action="store_true", help="log everything to standard error")
    return common


def _expression_flags() -> argparse.ArgumentParser:
    exprs = argparse.ArgumentParser(add_help=False)
    exprs.add_argument("--let", dest="lets", action="append", metavar="NAME=EXPR",
                       help="bind a name usable in later expressions (repeatable)")
    return exprs


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    exprs = _expression_flags()
    parser = argparse.ArgumentParser(
        prog="lif-toolkit",
        description="Exact truncated power series and Lagrange inversion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[common, exprs], help="print the coefficients of an expression")
    p.add_argument("expr")

    p = sub.add_parser("inverse", parents=[common, exprs], help="print the compositional inverse")
    p.add_argument("expr")

    p = sub.add_parser("lif-functional", parents=[common, exprs], help="[x^n] g(f-bar) by Lagrange inversion")
    p.add_argument("g_expr")
    p.add_argument("f_expr")
    p.add_argument("n", type=int)
    p.add_argument("--cross-check", action="store_true", help="compare against the inverse oracle")

    p = sub.add_parser("lif-sj", parents=[common, exprs], help="[x^n] f-bar^l by Lagrange inversion")
    p.add_argument("f_expr")
    p.add_argument("n", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--cross-check", action="store_true", help="compare against the inverse oracle")

    p = sub.add_parser("verify", parents=[common], help="run the seeded identity suite")
    p.add_argument("--checks", nargs="+", metavar="GROUP",
                   help=f"only these groups: {', '.join(CHECK_GROUPS)}")
    p.add_argument("--workers", type=int, default=1, help="trials evaluated concurrently")
    p.add_argument("--inject-fault", type=int, default=None, metavar="INDEX",
                   help="negative control: corrupt coefficient INDEX of every oracle inverse")

    p = sub.add_parser("gallery", parents=[common], help="worked families: catalan, cayley")
    p.add_argument("name")
    return parser


def configure_logging(verbose: bool = False, debug: bool = False) -> None:
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _dispatch(args: argparse.Namespace, cfg: CliConfig) -> int:
    if args.command == "coeffs":
        return cmd_coeffs(args.expr, cfg, lets=args.lets)
    if args.command == "inverse":
        return cmd_inverse(args.expr, cfg, lets=args.lets)
    if args.command == "lif-functional":
        return cmd_lif_functional(args.g_expr, args.f_expr, args.n, cfg,
                                  cross_check=args.cross_check, lets=args.lets)
    if args.command == "lif-sj":
        return cmd_lif_sj(args.f_expr, args.n, args.l, cfg,
                          cross_check=args.cross_check, lets=args.lets)
    if args.command == "verify":
        return cmd_verify(cfg, checks=args.checks, fault_index=args.inject_fault)
    if args.command == "gallery":
        return cmd_gallery(args.name, cfg)
    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    configure_logging(args.verbose, args.debug)

    try:
        cfg = CliConfig(
            order=args.order,
            format=args.format,
            seed=args.seed,
            trials=args.trials,
            workers=getattr(args, "workers", 1),
        )
    except ValidationError as exc:
        for err in exc.errors():
            field = ".".join(str(p) for p in err["loc"])
            diagnose(f"usage error: --{field}: {err['msg']}")
        return EXIT_USAGE

    logger.debug("running %s with %s", args.command, cfg)
    return _dispatch(args, cfg)


if __name__ == "__main__":
    sys.exit(main())
