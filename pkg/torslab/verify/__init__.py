from .checks import ALIASES, CHECKS
from .context import Instance
from .report import FAIL, PASS, SKIPPED, CheckReport, aggregate_status, build_report
from .suite import ALL, EXPECTED, ORDER, expected_report, resolve_ids, run_check, run_suite, suite_report

__all__ = [
    "ALIASES", "ALL", "CHECKS", "EXPECTED", "FAIL", "ORDER", "PASS", "SKIPPED", "CheckReport", "Instance",
    "aggregate_status", "build_report", "expected_report", "resolve_ids", "run_check", "run_suite", "suite_report",
]
