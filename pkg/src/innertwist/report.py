"""Check records and verification reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

__all__ = ["CheckRecord", "Report", "compare", "SCHEMA_VERSION"]

SCHEMA_VERSION = 1

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckRecord:
    anchor: str
    instance: str
    status: str
    witness: dict | None = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self):
        return {"anchor": self.anchor, "instance": self.instance, "status": self.status,
                "witness": self.witness, "elapsed": round(self.elapsed, 6)}

    def line(self) -> str:
        tag = {PASS: "PASS", FAIL: "FAIL", SKIPPED: "SKIP"}[self.status]
        out = f"[{tag}] {self.anchor} ({self.instance})"
        if self.witness and self.status != PASS:
            out += " " + ", ".join(f"{k}={v}" for k, v in self.witness.items())
        return out


def compare(anchor: str, lhs, rhs, instance: str = "") -> CheckRecord:
    """Exact matrix equality of two morphisms, with the first mismatch as witness."""
    start = time.perf_counter()
    if (lhs.source, lhs.target) != (rhs.source, rhs.target):
        return CheckRecord(anchor, instance, FAIL, {
            "reason": "type mismatch",
            "lhs": f"{lhs.source.name}->{lhs.target.name}",
            "rhs": f"{rhs.source.name}->{rhs.target.name}"},
            time.perf_counter() - start)
    diff = lhs.first_difference(rhs)
    if diff is None:
        return CheckRecord(anchor, instance, PASS, None, time.perf_counter() - start)
    i, j, a, b = diff
    return CheckRecord(anchor, instance, FAIL, {
        "row": i, "col": j,
        "row_label": lhs.target.label(i), "col_label": lhs.source.label(j),
        "lhs": str(a), "rhs": str(b)}, time.perf_counter() - start)


@dataclass
class Report:
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> CheckRecord:
        self.records.append(record)
        return record

    def extend(self, other: Report) -> Report:
        self.records.extend(other.records)
        return self

    @staticmethod
    def boolean(anchor, ok: bool, instance="", witness=None) -> CheckRecord:
        return CheckRecord(anchor, instance, PASS if ok else FAIL, None if ok else witness)

    @staticmethod
    def skipped(anchor, instance="", reason="") -> CheckRecord:
        return CheckRecord(anchor, instance, SKIPPED, {"reason": reason} if reason else None)

    @property
    def passed(self) -> bool:
        return not any(r.failed for r in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.failed]

    def __getitem__(self, anchor: str) -> CheckRecord:
        for r in self.records:
            if r.anchor == anchor:
                return r
        raise KeyError(anchor)

    def statuses(self, anchor: str) -> list[str]:
        return [r.status for r in self.records if r.anchor == anchor]

    def anchors(self) -> list[str]:
        return [r.anchor for r in self.records]

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def to_json(self, include_elapsed: bool = True) -> str:
        recs = []
        for r in self.records:
            d = r.to_dict()
            if not include_elapsed:
                d.pop("elapsed")
            recs.append(d)
        summary = {
            "total": len(self.records),
            "passed": sum(r.passed for r in self.records),
            "failed": sum(r.failed for r in self.records),
            "skipped": sum(r.status == SKIPPED for r in self.records),
        }
        return json.dumps({"schema": SCHEMA_VERSION, "summary": summary, "checks": recs},
                          indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [r.line() for r in self.records]
        n_fail = len(self.failures)
        lines.append(f"{len(self.records)} checks, {n_fail} failed")
        return "\n".join(lines)
