import time
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union

from ..config import WorkbenchConfig
from ..errors import ConfigError, TooLarge, UnknownCheck
from ..nakayama import AlgebraSpec
from ..observability import get_logger, log_event
from .checks import ALIASES, CHECKS, SKIP_ERRORS
from .context import Instance
from .report import FAIL, PASS, SKIPPED, CheckFailed, CheckReport, build_report

LOG = get_logger("verify")

ALL = "all"
ORDER = tuple(CHECKS)

# report entry comparing a run with the catalog `expected:` counts
EXPECTED = "EXPECTED"
COUNTABLE = ("tors", "torf", "wide", "bricks", "semibricks", "monobricks", "cc_monobricks")


def resolve_ids(ids: Union[str, Sequence[str]]) -> List[str]:
    """'all', a comma list or a sequence of ids (aliases allowed) in suite order."""
    if isinstance(ids, str):
        if ids.strip() == ALL:
            return list(ORDER)
        ids = [x for x in ids.split(",") if x.strip()]
    wanted = set()
    for raw in ids:
        key = ALIASES.get(raw.strip(), raw.strip())
        if key not in CHECKS:
            raise UnknownCheck(f"Unknown check {raw!r}; known: {', '.join(ORDER)}")
        wanted.add(key)
    return [k for k in ORDER if k in wanted]


def run_check(check_id: str, a: AlgebraSpec, config: Optional[WorkbenchConfig] = None,
              ctx: Optional[Instance] = None) -> CheckReport:
    key = ALIASES.get(check_id, check_id)
    if key not in CHECKS:
        raise UnknownCheck(f"Unknown check {check_id!r}; known: {', '.join(ORDER)}")
    ctx = ctx or Instance(a, config)
    t0 = time.time()
    report = CheckReport(id=key, algebra=str(a), status=PASS)
    try:
        result = CHECKS[key](ctx)
        if isinstance(result, tuple):
            report.counts, report.witness = result
        else:
            report.counts = result
    except CheckFailed as e:
        report.status, report.reason, report.witness, report.counts = FAIL, e.reason, e.witness, e.counts
    except SKIP_ERRORS as e:
        report.status, report.reason = SKIPPED, getattr(e, "reason", str(e))
    except AssertionError as e:
        report.status, report.reason = FAIL, "internal invariant violated"
        report.witness = {"assertion": str(e)}
    report.ms = int((time.time() - t0) * 1000)
    log_event(LOG, "check", id=key, algebra=str(a), status=report.status, dur_ms=report.ms)
    return report


def run_suite(a: AlgebraSpec, ids: Union[str, Sequence[str]] = ALL,
              config: Optional[WorkbenchConfig] = None) -> List[CheckReport]:
    """Run checks in fixed order over one shared instance cache."""
    ctx = Instance(a, config)
    return [run_check(key, a, ctx.config, ctx) for key in resolve_ids(ids)]


def expected_report(ctx: Instance, expected: Mapping[str, int]) -> CheckReport:
    """Observed counts against a catalog entry's `expected:` block."""
    unknown = sorted(set(expected) - set(COUNTABLE))
    if unknown:
        raise ConfigError(f"Unknown expected counts {unknown}; known: {', '.join(COUNTABLE)}")
    report = CheckReport(id=EXPECTED, algebra=str(ctx.algebra), status=PASS)
    t0 = time.time()
    try:
        report.counts = {name: len(getattr(ctx, name)) for name in sorted(expected)}
    except SKIP_ERRORS as e:
        report.status, report.reason = SKIPPED, getattr(e, "reason", str(e))
    else:
        wrong = {name: {"expected": want, "observed": report.counts[name]}
                 for name, want in sorted(expected.items()) if report.counts[name] != want}
        if wrong:
            report.status, report.reason, report.witness = FAIL, "counts differ from the catalog", wrong
    report.ms = int((time.time() - t0) * 1000)
    log_event(LOG, "check", id=EXPECTED, algebra=str(ctx.algebra), status=report.status, dur_ms=report.ms)
    return report


def instance_header(ctx: Instance, brick_finite: bool = True) -> Dict[str, Any]:
    """Brick count, |tors| and |wide| for the report header; None where a cap is hit."""
    header: Dict[str, Any] = {"indecomposables": len(ctx.indecs), "bricks": len(ctx.bricks),
                              "brick_finite": brick_finite}
    for name in ("tors", "wide"):
        try:
            header[name] = len(getattr(ctx, name))
        except TooLarge:
            header[name] = None
    return header


def suite_report(a: AlgebraSpec, ids: Union[str, Sequence[str]] = ALL,
                 config: Optional[WorkbenchConfig] = None, notes: Sequence[str] = (),
                 expected: Optional[Mapping[str, int]] = None, brick_finite: bool = True) -> Dict[str, Any]:
    """
    Run the suite and build the report document. With `expected` (a catalog
    entry's counts) an EXPECTED entry follows the checks.
    """
    ctx = Instance(a, config)
    reports = [run_check(key, a, ctx.config, ctx) for key in resolve_ids(ids)]
    if expected:
        reports.append(expected_report(ctx, expected))
    doc = build_report(str(a), reports, header=instance_header(ctx, brick_finite), notes=notes)
    log_event(LOG, "suite", algebra=str(a), status=doc["status"], failed=doc["summary"][FAIL],
              skipped=doc["summary"][SKIPPED])
    return doc
