"""exporters/plain_exporter.py: line-oriented text output."""
from typing import Iterable, List

import pandas as pd

from lif_toolkit.algebra.rational import Rational, format_rational
from lif_toolkit.algebra.series import TruncatedSeries
from lif_toolkit.validators.checks import VerifyReport


def export_series(f: TruncatedSeries) -> str:
    """One "index: value" line per stored coefficient."""
    return "\n".join(f"{i}: {format_rational(c)}" for i, c in enumerate(f.coeffs))


def export_value(value: Rational) -> str:
    return format_rational(value)


def export_report(report: VerifyReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    parts = [status, report.check_name, f"trial={report.trial}", f"seed={report.seed}"]
    if report.detail:
        parts.append(report.detail)
    if report.first_mismatch is not None:
        m = report.first_mismatch
        parts.append(f"mismatch index={m.index} lhs={format_rational(m.lhs)} rhs={format_rational(m.rhs)}")
    return " ".join(parts)


def export_reports(reports: Iterable[VerifyReport]) -> str:
    return "\n".join(export_report(r) for r in reports)


def export_table(df: pd.DataFrame) -> str:
    """Rationals are written as p/q; the frame itself is left untouched."""
    return _stringify(df).to_string(index=False)


def summarize_reports(reports: List[VerifyReport]) -> pd.DataFrame:
    """Per-check pass/fail counts, in first-seen check order."""
    if not reports:
        return pd.DataFrame(columns=["check", "passed", "failed"])
    df = pd.DataFrame({"check": [r.check_name for r in reports], "passed": [r.passed for r in reports]})
    summary = (
        df.groupby("check", sort=False)["passed"]
        .agg(passed="sum", total="count")
        .reset_index()
    )
    summary["failed"] = summary["total"] - summary["passed"]
    return summary[["check", "passed", "failed"]]


def _stringify(df: pd.DataFrame) -> pd.DataFrame:
    out = df.copy()
    for col in out.columns:
        if out[col].dtype == object:
            out[col] = out[col].apply(lambda v: format_rational(v) if isinstance(v, Rational) else v)
    return out
