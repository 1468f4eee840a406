"""Pass/fail reports shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


def _jsonable(v: Any) -> Any:
    return v.to_json() if hasattr(v, "to_json") else v


@dataclass
class Check:
    """One exact comparison, e.g. a single rank of the looped-coxeter recursion."""
    name: str
    n: int
    passed: bool
    lhs: Any
    rhs: Any
    epsilon: int | None = None
    mirror_branch: str | None = None

    def to_json(self) -> dict:
        return {
            "name": self.name, "n": self.n, "pass": self.passed,
            "lhs": _jsonable(self.lhs), "rhs": _jsonable(self.rhs),
            "epsilon": self.epsilon, "mirrorBranch": self.mirror_branch,
        }

    def line(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.name} n={self.n}"
        if self.passed:
            return head
        return f"{head}\n  lhs = {self.lhs}\n  rhs = {self.rhs}"


@dataclass
class PropertyReport:
    """Counts per property family plus the failing samples."""
    name: str
    samples: int
    seed: int
    counts: dict[str, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, prop: str, ok: bool, **detail) -> None:
        self.counts[prop] = self.counts.get(prop, 0) + 1
        if not ok:
            self.failures.append({"property": prop, **detail})

    def failed(self, prop: str) -> int:
        return sum(1 for f in self.failures if f["property"] == prop)

    def to_json(self) -> dict:
        return {
            "name": self.name, "samples": self.samples, "seed": self.seed,
            "pass": self.passed, "counts": dict(sorted(self.counts.items())),
            "failures": self.failures,
        }

    def lines(self) -> list[str]:
        out = []
        for prop in sorted(self.counts):
            bad = self.failed(prop)
            total = self.counts[prop]
            out.append(f"{'PASS' if not bad else 'FAIL'} {self.name}.{prop}: "
                       f"{total - bad}/{total}")
        return out
