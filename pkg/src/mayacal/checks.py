"""Structured pass/fail checks shared by the verification suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def jsonable(value: Any) -> Any:
    """Render exact values losslessly for machine output (Fractions as 'n/d')."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return str(value)


@dataclass(frozen=True)
class Check:
    """One verified identity: a name, the expected value, and what was computed."""

    name: str
    expected: Any
    computed: Any
    passed: bool

    @classmethod
    def eq(cls, name: str, expected: Any, computed: Any) -> "Check":
        return cls(name=name, expected=expected, computed=computed, passed=expected == computed)

    def as_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "expected": jsonable(self.expected),
            "computed": jsonable(self.computed),
            "pass": self.passed,
        }


@dataclass
class Report:
    """A named bundle of checks; ``ok`` iff every check passed."""

    title: str
    checks: list[Check] = field(default_factory=list)

    def check(self, name: str, expected: Any, computed: Any) -> Check:
        c = Check.eq(name, expected, computed)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [c.as_dict() for c in self.checks],
        }
