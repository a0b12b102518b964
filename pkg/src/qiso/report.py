"""Check records shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

__all__ = ["Check", "Report"]


@dataclass
class Check:
    id: str
    ok: bool
    ref: str = ""
    detail: str = ""
    residual: Optional[float] = None
    params: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"id": self.id, "verdict": "pass" if self.ok else "fail", "paper_ref": self.ref}
        if self.detail:
            out["detail"] = self.detail
        if self.residual is not None:
            out["residual"] = float(self.residual)
        if self.params:
            out["parameters"] = dict(self.params)
        return out


@dataclass
class Report:
    """An ordered list of checks plus free-form metadata."""

    name: str
    checks: List[Check] = field(default_factory=list)
    meta: Dict[str, Any] = field(default_factory=dict)

    def add(self, id: str, ok: bool, ref: str = "", detail: str = "",
            residual: float | None = None, **params) -> Check:
        ch = Check(id, bool(ok), ref, detail, residual, params)
        self.checks.append(ch)
        return ch

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for ch in other.checks:
            self.checks.append(Check(prefix + ch.id, ch.ok, ch.ref, ch.detail, ch.residual,
                                     dict(ch.params)))
        for k, v in other.meta.items():
            self.meta[prefix + k] = v
        return self

    @property
    def passed(self) -> bool:
        return all(ch.ok for ch in self.checks)

    def failures(self) -> List[Check]:
        return [ch for ch in self.checks if not ch.ok]

    def counts(self) -> Dict[str, int]:
        n = len(self.checks)
        bad = len(self.failures())
        return {"total": n, "passed": n - bad, "failed": bad}

    def __getitem__(self, id: str) -> Check:
        for ch in self.checks:
            if ch.id == id:
                return ch
        raise KeyError(id)

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    def to_dict(self) -> dict:
        return {"name": self.name, "checks": [c.to_dict() for c in self.checks],
                "summary": self.counts(), "meta": dict(self.meta)}

    def __str__(self):
        lines = [f"{self.name}: {self.counts()['passed']}/{len(self.checks)} pass"]
        for ch in self.checks:
            mark = "ok  " if ch.ok else "FAIL"
            extra = f"  {ch.detail}" if ch.detail and not ch.ok else ""
            lines.append(f"  {mark} {ch.id}{extra}")
        return "\n".join(lines)
