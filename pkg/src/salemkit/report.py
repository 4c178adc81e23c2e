"""Verification bookkeeping: named checks with measured error vs tolerance."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class VerificationEntry:
    """One named check.  ``passed`` is always ``measured <= tolerance``."""

    check_id: str
    measured: float
    tolerance: float
    notes: str = ""

    def __post_init__(self):
        object.__setattr__(self, "measured", float(self.measured))
        object.__setattr__(self, "tolerance", float(self.tolerance))

    @property
    def passed(self) -> bool:
        return bool(self.measured <= self.tolerance)

    def as_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "measured": self.measured,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "notes": self.notes,
        }

    def __str__(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"[{flag}] {self.check_id}: measured={self.measured:.3e} tol={self.tolerance:.3e}"


@dataclass
class VerificationReport:
    entries: list[VerificationEntry] = field(default_factory=list)

    def add(self, entry: VerificationEntry) -> None:
        self.entries.append(entry)

    def extend(self, entries) -> None:
        self.entries.extend(entries)

    def sorted(self) -> "VerificationReport":
        return VerificationReport(sorted(self.entries, key=lambda e: e.check_id))

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def as_list(self) -> list[dict]:
        return [e.as_dict() for e in self.entries]

    def to_json(self, **kwargs) -> str:
        kwargs.setdefault("indent", 2)
        kwargs.setdefault("sort_keys", True)
        return json.dumps(self.as_list(), **kwargs)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def entry_from_residual(check_id: str, measured: float, tolerance: float, notes: str = "") -> VerificationEntry:
    return VerificationEntry(check_id=check_id, measured=float(measured), tolerance=float(tolerance), notes=notes)
