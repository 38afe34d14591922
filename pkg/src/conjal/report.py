from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    """Ordered list of named pass/fail checks plus free-form notes."""

    title: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, label: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(label, bool(passed), detail))
        return bool(passed)

    def note(self, text: str):
        self.notes.append(text)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, label: str) -> Check:
        for c in self.checks:
            if c.label == label:
                return c
        raise KeyError(label)

    def render(self) -> str:
        lines = [self.title]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            line = f"  [{mark}] {c.label}"
            if c.detail:
                line += f": {c.detail}"
            lines.append(line)
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)
