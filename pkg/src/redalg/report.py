"""Structured pass/fail outcome of a verification suite, serializable to JSON."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class Check:
    label: str
    passed: bool
    detail: Any = None


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, label: str, passed: bool, detail: Any = None) -> Check:
        c = Check(label, bool(passed), detail)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.label, c.passed, c.detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": [
                {"label": c.label, "passed": c.passed, "detail": _plain(c.detail)}
                for c in self.checks
            ],
            "meta": _plain(self.meta),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"{self.name}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{'PASS' if c.passed else 'FAIL'}] {c.label}")
        for k, v in self.meta.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, float) and math.isinf(x):
        return "-inf" if x < 0 else "inf"
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, Fraction):
        return str(x)
    return str(x)
