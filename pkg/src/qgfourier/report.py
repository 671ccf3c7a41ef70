"""Pass/fail records for property-suite runs."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    suite: str
    case: str
    status: str  # "pass" | "fail" | "skip"
    witness: str | None = None
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.status == "fail" and self.witness is None:
            self.witness = "unspecified failure"

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def passed(reports) -> bool:
    return all(r.ok for r in reports)


def failures(reports):
    return [r for r in reports if not r.ok]


def make_report(suite, case, ok, witness=None) -> CheckReport:
    if ok:
        return CheckReport(suite, case, "pass")
    return CheckReport(suite, case, "fail", witness=witness or "identity failed")
