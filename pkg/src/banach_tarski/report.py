"""Verification reports shared by every verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

# Reports keep only the first few violations; the count is always exact.
MAX_LISTED_VIOLATIONS = 50


@dataclass
class Report:
    lemma: str
    params: dict[str, Any] = field(default_factory=dict)
    words_checked: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    violation_count: int = 0
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def add(self, word: str, i: int | None = None, detail: str = "") -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_LISTED_VIOLATIONS:
            self.violations.append({"word": word, "i": i, "detail": detail})

    def merge(self, other_violations: list[dict[str, Any]], count: int, checked: int) -> None:
        self.words_checked += checked
        self.violation_count += count
        room = MAX_LISTED_VIOLATIONS - len(self.violations)
        if room > 0:
            self.violations.extend(other_violations[:room])

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"lemma": self.lemma}
        out.update(self.params)
        out["words_checked"] = self.words_checked
        out["violation_count"] = self.violation_count
        out["violations"] = list(self.violations)
        out.update(self.extra)
        out["pass"] = self.passed
        return out

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.lemma} {self.params} checked={self.words_checked} violations={self.violation_count}"
