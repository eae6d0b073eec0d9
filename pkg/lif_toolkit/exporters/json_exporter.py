"""exporters/json_exporter.py: the documented JSON forms for series, values and reports."""
import json
from typing import Iterable, List

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from lif_toolkit.algebra.rational import Rational, format_rational, parse_rational
from lif_toolkit.algebra.series import TruncatedSeries
from lif_toolkit.errors import PreconditionViolated
from lif_toolkit.validators.checks import VerifyReport


class SeriesPayload(BaseModel):
    """{"truncation": N, "coeffs": ["p/q", ...]}"""

    model_config = ConfigDict(frozen=True)

    truncation: int = Field(ge=0)
    coeffs: List[str]

    @classmethod
    def from_series(cls, f: TruncatedSeries) -> "SeriesPayload":
        return cls(truncation=f.truncation, coeffs=[format_rational(c) for c in f.coeffs])

    def to_series(self) -> TruncatedSeries:
        if len(self.coeffs) != self.truncation + 1:
            raise PreconditionViolated(
                f"truncation {self.truncation} needs {self.truncation + 1} coefficients, got {len(self.coeffs)}"
            )
        return TruncatedSeries(tuple(parse_rational(c) for c in self.coeffs))


def export_series(f: TruncatedSeries) -> str:
    return SeriesPayload.from_series(f).model_dump_json()


def import_series(text: str) -> TruncatedSeries:
    return SeriesPayload.model_validate_json(text).to_series()


def export_object(payload: dict) -> str:
    """Rationals anywhere in the payload are written as "p/q"."""
    return json.dumps(payload, default=_encode)


def export_report(report: VerifyReport) -> str:
    return json.dumps(report.to_json_dict())


def export_reports(reports: Iterable[VerifyReport]) -> str:
    """JSON lines: one report object per line."""
    return "\n".join(export_report(r) for r in reports)


def export_table(df: pd.DataFrame) -> str:
    return json.dumps(df.to_dict(orient="records"), default=_encode)


def _encode(value):
    if isinstance(value, Rational):
        return format_rational(value)
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"cannot encode {type(value).__name__}")
