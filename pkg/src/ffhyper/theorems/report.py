"""Verification reports and their text / JSON renderings."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Optional

from ..cyclotomic import CycNum
from ..finite_field import FieldCtx


@dataclass
class Failure:
    params: tuple
    lhs: CycNum
    rhs: CycNum
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "tuple": list(self.params),
            "note": self.note,
            "lhs": self.lhs.to_dict(),
            "rhs": self.rhs.to_dict(),
        }


@dataclass
class TheoremReport:
    theorem_id: str
    q: int
    tuples_tested: int = 0
    branch_counts: dict[str, int] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)
    checks: int = 0
    elapsed: float = 0.0
    skipped: Optional[str] = None
    field_info: Optional[dict] = None

    @property
    def success(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        # elapsed is deliberately left out: reports must be byte-reproducible
        return {
            "theorem_id": self.theorem_id,
            "q": self.q,
            "generator": self.field_info,
            "tuples_tested": self.tuples_tested,
            "checks": self.checks,
            "branches": dict(sorted(self.branch_counts.items())),
            "failures": [f.to_dict() for f in self.failures],
            "skipped": self.skipped is not None,
            "skip_reason": self.skipped,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def status(self) -> str:
        if self.skipped is not None:
            return "SKIP"
        return "PASS" if self.success else "FAIL"

    def to_text(self, timing: bool = False) -> str:
        branches = ",".join(f"{k}:{v}" for k, v in sorted(self.branch_counts.items()))
        line = (
            f"{self.status()} theorem={self.theorem_id} q={self.q} tested={self.tuples_tested} "
            f"checks={self.checks} failures={len(self.failures)} branches={branches or '-'}"
        )
        if self.skipped is not None:
            line += f" reason={self.skipped!r}"
        if timing:
            line += f" elapsed={self.elapsed:.2f}s"
        lines = [line]
        for f in self.failures:
            lines.append(f"  tuple={list(f.params)} {f.note} lhs={f.lhs} rhs={f.rhs}")
        return "\n".join(lines)


def reports_to_json(reports: list[TheoremReport], plan=None) -> str:
    doc = {"reports": [r.to_dict() for r in reports]}
    if plan is not None:
        doc["plan"] = str(plan)
    return json.dumps(doc, sort_keys=True, indent=1)


class Tally:
    """Collects branch counts and failures while a verifier runs."""

    def __init__(self, theorem_id: str, ctx: FieldCtx):
        self.report = TheoremReport(theorem_id, ctx.q, field_info=ctx.describe())
        self._t0 = time.perf_counter()

    def branch(self, label: str) -> None:
        r = self.report
        r.tuples_tested += 1
        r.branch_counts[label] = r.branch_counts.get(label, 0) + 1

    def compare(self, params, lhs: CycNum, rhs: CycNum, note: str = "") -> bool:
        self.report.checks += 1
        if lhs == rhs:
            return True
        self.report.failures.append(Failure(tuple(params), lhs, rhs, note))
        return False

    def finish(self) -> TheoremReport:
        self.report.elapsed = time.perf_counter() - self._t0
        return self.report


def skipped_report(
    theorem_id: str, q: int, reason: str, field_info: Optional[dict] = None
) -> TheoremReport:
    return TheoremReport(theorem_id, q, skipped=reason, field_info=field_info)
