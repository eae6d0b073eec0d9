"""
commands/gallery_cmd.py
Worked families: f-bar coefficients three ways (LIF, oracle, closed form).
Each family is defined by its phi, so f = x / phi(x).
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict

import pandas as pd

from lif_toolkit.algebra import series as ps
from lif_toolkit.config import CliConfig
from lif_toolkit.errors import LifToolkitError, PreconditionViolated
from lif_toolkit.exporters import json_exporter, plain_exporter
from lif_toolkit.parsers.evaluator import evaluate_text
from lif_toolkit.validators import lif

from .utils import EXIT_CROSS_CHECK, EXIT_OK, diagnose, emit, report_error

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GalleryFamily:
    phi_expr: str
    closed_form: Callable[[int], Fraction]
    closed_form_text: str


def _catalan(n: int) -> Fraction:
    """Catalan(n-1) = C(2n-2, n-1) / n"""
    return Fraction(math.comb(2 * n - 2, n - 1), n)


def _cayley(n: int) -> Fraction:
    """n^{n-1} / n!"""
    return Fraction(n ** (n - 1), math.factorial(n))


GALLERY_FAMILIES: Dict[str, GalleryFamily] = {
    "catalan": GalleryFamily("1/(1-x)", _catalan, "C(2n-2,n-1)/n"),
    "cayley":  GalleryFamily("exp(x)", _cayley, "n^(n-1)/n!"),
}


def gallery_table(name: str, order: int) -> pd.DataFrame:
    family = GALLERY_FAMILIES.get(name)
    if family is None:
        raise PreconditionViolated(
            f"unknown gallery {name!r}; choose from {', '.join(GALLERY_FAMILIES)}"
        )
    phi = evaluate_text(family.phi_expr, order - 1)
    f = lif.f_from_phi(phi, order)
    fbar = ps.comp_inverse(f)
    rows = []
    for n in range(1, order + 1):
        rows.append({
            "n": n,
            "lif": lif.lif_schur_jabotinsky(f, n, 1),
            "oracle": ps.coeff(fbar, n),
            "closed_form": family.closed_form(n),
        })
    df = pd.DataFrame(rows, columns=["n", "lif", "oracle", "closed_form"])
    df["agree"] = (df["lif"] == df["oracle"]) & (df["oracle"] == df["closed_form"])
    return df


def cmd_gallery(name: str, cfg: CliConfig) -> int:
    try:
        df = gallery_table(name, cfg.order)
    except LifToolkitError as exc:
        return report_error(exc)

    if cfg.format == "json":
        emit(json_exporter.export_table(df))
    else:
        family = GALLERY_FAMILIES[name]
        emit(f"# {name}: phi = {family.phi_expr}, closed form {family.closed_form_text}")
        emit(plain_exporter.export_table(df))

    if not df["agree"].all():
        bad = df.loc[~df["agree"], "n"].tolist()
        logger.error("gallery %s disagrees at n=%s", name, bad)
        diagnose(f"error: gallery columns disagree at n = {bad}")
        return EXIT_CROSS_CHECK
    return EXIT_OK
