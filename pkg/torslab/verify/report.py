"""
Check reports and the suite report document.
"""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

KAPPA_READING = "extended"


class CheckFailed(Exception):
    """Raised inside a check; always carries the offending object."""

    def __init__(self, reason: str, witness: Any, counts: Optional[Dict[str, Any]] = None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness
        self.counts = counts or {}


class CheckSkipped(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass
class CheckReport:
    id: str
    algebra: str
    status: str
    counts: Dict[str, Any] = field(default_factory=dict)
    witness: Any = None
    ms: int = 0
    reason: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        if data["reason"] is None:
            del data["reason"]
        return data


def aggregate_status(reports: Sequence[CheckReport]) -> str:
    """fail if any check failed; skipped checks count as pass-with-note."""
    return FAIL if any(r.status == FAIL for r in reports) else PASS


def build_report(algebra: str, reports: Sequence[CheckReport], header: Optional[Dict[str, Any]] = None,
                 notes: Sequence[str] = ()) -> Dict[str, Any]:
    summary = {
        PASS: sum(r.status == PASS for r in reports),
        FAIL: sum(r.status == FAIL for r in reports),
        SKIPPED: sum(r.status == SKIPPED for r in reports),
    }
    doc: Dict[str, Any] = {
        "algebra": algebra,
        "status": aggregate_status(reports),
        "kappa_reading": KAPPA_READING,
        "header": dict(header or {}),
        "notes": list(notes),
        "summary": summary,
        "checks": [r.to_dict() for r in reports],
    }
    return doc
