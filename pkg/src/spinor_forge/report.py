"""Pass/fail bookkeeping shared by the verifiers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """One verified identity.

    ``bound="upper"`` passes when residual <= threshold (an identity that must
    hold); ``bound="lower"`` passes when residual >= threshold (a property
    that must fail, e.g. "not an eigenstate").
    """

    id: str
    anchor: str
    residual: float
    threshold: float
    bound: str = "upper"

    @property
    def passed(self) -> bool:
        if self.bound == "lower":
            return self.residual >= self.threshold
        return self.residual <= self.threshold

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "residual": self.residual,
            "threshold": self.threshold,
            "bound": self.bound,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, id: str, anchor: str, residual: float, threshold: float, bound: str = "upper") -> Check:
        c = Check(id, anchor, float(residual), float(threshold), bound)
        self.checks.append(c)
        return c

    def note(self, text: str) -> None:
        self.notes.append(text)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def n_passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def n_failed(self) -> int:
        return len(self.checks) - self.n_passed

    def get(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
            "summary": {"total": len(self.checks), "passed": self.n_passed, "failed": self.n_failed},
        }
