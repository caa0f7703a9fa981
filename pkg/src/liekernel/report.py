"""Structured pass/fail records for verification suites."""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field

PASS, FAIL, SKIP, INFO_DIFF = "pass", "fail", "skip", "info-diff"
STATUSES = (PASS, FAIL, SKIP, INFO_DIFF)


@dataclass
class Check:
    id: str
    anchor: str
    status: str
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "status": self.status, "witness": self.witness}


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)
    elapsed: float = 0.0

    def __post_init__(self):
        self._lock = threading.Lock()
        self._t0 = time.perf_counter()

    def add(self, id: str, anchor: str, ok: bool, witness: dict | None = None) -> bool:
        self._append(Check(id, anchor, PASS if ok else FAIL, witness or {}))
        return ok

    def info(self, id: str, anchor: str, witness: dict | None = None) -> None:
        self._append(Check(id, anchor, INFO_DIFF, witness or {}))

    def skip(self, id: str, anchor: str, reason: str) -> None:
        self._append(Check(id, anchor, SKIP, {"reason": reason}))

    def _append(self, check: Check) -> None:
        if check.status not in STATUSES:
            raise ValueError(check.status)
        with self._lock:
            self.checks.append(check)

    def extend(self, other: VerificationReport) -> None:
        for c in other.checks:
            self._append(c)

    def finish(self) -> VerificationReport:
        self.elapsed = time.perf_counter() - self._t0
        return self

    def by_id(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    @property
    def summary(self) -> dict:
        out = {PASS: 0, FAIL: 0, SKIP: 0, INFO_DIFF: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def failures(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    def to_json(self, timing: bool = True) -> dict:
        s = self.summary
        doc = {
            "suite": self.suite,
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.id)],
            "summary": {"pass": s[PASS], "fail": s[FAIL], "skip": s[SKIP], "info-diff": s[INFO_DIFF]},
        }
        if timing:
            doc["elapsed"] = round(self.elapsed, 3)
        return doc

    def format_text(self) -> str:
        lines = [f"== {self.suite} =="]
        for c in sorted(self.checks, key=lambda c: c.id):
            lines.append(f"[{c.status:>9}] {c.id}")
        s = self.summary
        lines.append(f"pass={s[PASS]} fail={s[FAIL]} skip={s[SKIP]} info-diff={s[INFO_DIFF]}")
        return "\n".join(lines)


REPORT_SCHEMA = {
    "type": "object",
    "required": ["suite", "checks", "summary"],
    "properties": {
        "suite": {"type": "string"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "anchor", "status", "witness"],
                "properties": {
                    "id": {"type": "string"},
                    "anchor": {"type": "string"},
                    "status": {"enum": list(STATUSES)},
                    "witness": {"type": "object"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "skip"],
            "properties": {k: {"type": "integer", "minimum": 0} for k in ("pass", "fail", "skip", "info-diff")},
        },
        "elapsed": {"type": "number"},
    },
}
