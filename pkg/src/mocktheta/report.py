"""Verification reports: one record per check, JSON round-trip and a text rendering."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


@dataclass(frozen=True)
class Failure:
    n: int
    expected: str
    actual: str


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass" | "fail"
    order: int
    modulus: int | None = None
    cleared_multiplier: int | None = None
    first_failure: Failure | None = None

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and self.first_failure is None:
            raise ValueError(f"failed check {self.name!r} needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @classmethod
    def outcome(cls, name, ok: bool, order: int, modulus=None, multiplier=None, witness=None) -> "Check":
        """Build a check; ``witness`` is ``(n, expected, actual)`` and only kept on failure."""
        if ok:
            return cls(name, "pass", order, modulus, multiplier, None)
        if witness is None:
            witness = (0, "true", "false")
        n, exp, act = witness
        return cls(name, "fail", order, modulus, multiplier, Failure(int(n), str(exp), str(act)))


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: int = 0

    def __post_init__(self):
        self.checks = sorted(self.checks, key=lambda c: c.name)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [asdict(c) for c in self.checks],
            "elapsed_ms": int(self.elapsed_ms),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        checks = []
        for c in d["checks"]:
            ff = c.get("first_failure")
            checks.append(
                Check(
                    c["name"],
                    c["status"],
                    c["order"],
                    c.get("modulus"),
                    c.get("cleared_multiplier"),
                    Failure(**ff) if ff else None,
                )
            )
        return cls(d["suite"], checks, d.get("elapsed_ms", 0))

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def render_text(self) -> str:
        lines = [f"suite {self.suite}"]
        for c in self.checks:
            tag = "PASS" if c.passed else "FAIL"
            extra = f" mod {c.modulus}" if c.modulus else ""
            line = f"  {tag}  {c.name}  (order {c.order}{extra})"
            if c.first_failure:
                f = c.first_failure
                line += f"  first failure n={f.n}: expected {f.expected}, got {f.actual}"
            lines.append(line)
        n_fail = len(self.failures)
        lines.append(f"{len(self.checks) - n_fail} passed, {n_fail} failed in {self.elapsed_ms} ms")
        return "\n".join(lines)


def series_witness(lhs, rhs, order: int | None = None):
    """``(n, expected, actual)`` at the first differing coefficient, or ``None``."""
    n = lhs.first_difference(rhs, order)
    if n is None:
        return None
    return n, rhs.coefficient(n), lhs.coefficient(n)


def series_check(name, lhs, rhs, order, modulus=None, multiplier=None) -> Check:
    w = series_witness(lhs, rhs, order)
    return Check.outcome(name, w is None, order, modulus, multiplier, w)
