"""Verification reports: counts of checked instances and the first failure, if any."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    name: str
    ok: bool = True
    checked: dict[str, int] = field(default_factory=dict)
    failure: dict | None = None
    notes: list[str] = field(default_factory=list)

    def tick(self, identity: str, n: int = 1) -> None:
        self.checked[identity] = self.checked.get(identity, 0) + n

    def fail(self, identity: str, **witness) -> "Report":
        self.ok = False
        if self.failure is None:
            self.failure = {"identity": identity, "witness": witness}
        return self

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        out = {"check": self.name, "ok": self.ok, "checked": dict(sorted(self.checked.items()))}
        if self.failure is not None:
            out["failure"] = self.failure
        if self.notes:
            out["notes"] = list(self.notes)
        return out
