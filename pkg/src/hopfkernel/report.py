"""Verification reports: named checks with pass/fail, counts and a witness."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckResult:
    name: str
    passed: bool
    count: int = 0
    witness: Optional[Dict[str, Any]] = None
    detail: Optional[Dict[str, Any]] = None

    def to_json(self) -> dict:
        out: Dict[str, Any] = {"name": self.name, "passed": self.passed, "count": self.count}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class VerificationReport:
    title: str
    checks: List[CheckResult] = field(default_factory=list)
    meta: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(CheckResult(prefix + c.name, c.passed, c.count, c.witness, c.detail))

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "meta": self.meta,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def summary_lines(self) -> List[str]:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name} ({c.count})")
            if not c.passed and c.witness:
                for k in sorted(c.witness):
                    lines.append(f"         {k}: {c.witness[k]}")
        return lines


class Tally:
    """Accumulates one named check; keeps only the first failing witness."""

    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.witness: Optional[Dict[str, Any]] = None

    def record(self, ok: bool, witness_fn=None) -> bool:
        self.count += 1
        if not ok and self.witness is None:
            self.witness = witness_fn() if witness_fn else {"index": self.count}
        return ok

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.witness is None, self.count, self.witness)
