"""Uniform pass/fail reports for structure checkers.

Every checker returns a CheckReport: a list of named items, each either
passing or failing with a witness.  Reports render to stable text so two
runs over the same input are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    witness: object = None
    note: str = ""

    def to_text(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        out = f"[{tag}] {self.name}"
        if not self.passed and self.witness is not None:
            out += f"  witness={self.witness}"
        if self.note:
            out += f"  ({self.note})"
        return out


@dataclass
class CheckReport:
    subject: str
    items: list[CheckItem] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness=None, note: str = "") -> None:
        self.items.append(CheckItem(name, bool(passed), witness, note))

    @property
    def ok(self) -> bool:
        return all(item.passed for item in self.items)

    def failures(self) -> list[CheckItem]:
        return [item for item in self.items if not item.passed]

    def first_failure(self) -> CheckItem | None:
        bad = self.failures()
        return bad[0] if bad else None

    def item(self, name: str) -> CheckItem:
        for it in self.items:
            if it.name == name:
                return it
        raise KeyError(name)

    def to_text(self) -> str:
        lines = [f"check: {self.subject}"]
        lines += ["  " + item.to_text() for item in self.items]
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_text()
