"""Pass/fail records produced by the verifiers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .series import Series


@dataclass
class CaseResult:
    id: str
    params: dict[str, Any]
    passed: bool
    first_failure: str | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"id": self.id, "params": dict(self.params), "pass": self.passed}
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure
        return out


@dataclass
class Report:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def add(self, id: str, params: dict, passed: bool, first_failure: str | None = None):
        self.cases.append(CaseResult(id, params, passed, None if passed else first_failure))

    def extend(self, other: "Report", prefix: str | None = None):
        for c in other.cases:
            cid = f"{prefix}/{c.id}" if prefix else c.id
            self.cases.append(CaseResult(cid, c.params, c.passed, c.first_failure))

    def to_dict(self) -> dict[str, Any]:
        return {"suite": self.suite, "cases": [c.to_dict() for c in self.cases], "pass": self.passed}

    def to_text(self) -> str:
        lines = []
        for c in self.cases:
            status = "PASS" if c.passed else "FAIL"
            params = " ".join(f"{k}={v}" for k, v in c.params.items())
            line = f"{status} {self.suite}:{c.id} [{params}]"
            if c.first_failure:
                line += f" -- {c.first_failure}"
            lines.append(line)
        lines.append(f"{self.suite}: {'all passed' if self.passed else 'FAILED'} ({len(self.cases)} cases)")
        return "\n".join(lines)


def first_graded_difference(lhs: Series, rhs: Series) -> str | None:
    """Describe the lowest-degree graded piece where two series differ, or ``None``."""
    diff = lhs - rhs
    if not diff:
        return None
    for d, part in enumerate(diff.components()):
        if part:
            return f"degree {d}: lhs - rhs = {part.to_text()}"
    return "series differ"
