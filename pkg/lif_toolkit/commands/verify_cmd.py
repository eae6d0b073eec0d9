"""commands/verify_cmd.py: run the seeded identity suite."""
import logging
import time
from typing import List, Optional

from lif_toolkit.config import CliConfig
from lif_toolkit.errors import LifToolkitError
from lif_toolkit.exporters import json_exporter, plain_exporter
from lif_toolkit.validators.suite import run_suite

from .utils import EXIT_OK, EXIT_VERIFY_FAIL, diagnose, emit, report_error

logger = logging.getLogger(__name__)


def cmd_verify(cfg: CliConfig, checks: Optional[List[str]] = None, fault_index: Optional[int] = None) -> int:
    started = time.perf_counter()
    try:
        reports = run_suite(
            cfg.seed, cfg.order, cfg.trials,
            checks=checks, workers=cfg.workers, fault_index=fault_index,
        )
    except LifToolkitError as exc:
        return report_error(exc)
    logger.info("verify finished in %.2fs", time.perf_counter() - started)

    if cfg.format == "json":
        emit(json_exporter.export_reports(reports))
    else:
        emit(plain_exporter.export_reports(reports))
    diagnose(plain_exporter.export_table(plain_exporter.summarize_reports(reports)))

    failed = [r for r in reports if not r.passed]
    if failed:
        diagnose(f"{len(failed)} of {len(reports)} checks failed")
        return EXIT_VERIFY_FAIL
    return EXIT_OK
