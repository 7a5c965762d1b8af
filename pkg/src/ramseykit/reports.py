"""Structured pass/fail reports for theorem hypotheses and proof chains."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
INFO = "info"          # recorded evidence, never affects the verdict
NOT_APPLICABLE = "n/a"  # clause outside its regime; a sibling clause covers


@dataclass
class Clause:
    cid: str
    text: str
    status: str
    evidence: dict = field(default_factory=dict)


@dataclass
class HypothesisReport:
    theorem: str
    clauses: list[Clause] = field(default_factory=list)
    precision: int | None = None
    meta: dict = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(cl.status != FAIL for cl in self.clauses)

    def add(self, cid: str, text: str, ok, evidence: dict | None = None) -> Clause:
        """Append a clause; `ok` may be a bool or an explicit status string."""
        status = ok if isinstance(ok, str) else (PASS if ok else FAIL)
        cl = Clause(cid, text, status, dict(evidence or {}))
        self.clauses.append(cl)
        return cl

    def failed_clauses(self) -> list[Clause]:
        return [cl for cl in self.clauses if cl.status == FAIL]

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "overall": self.overall,
            "precision": self.precision,
            "meta": self.meta,
            "clauses": [
                {"id": cl.cid, "text": cl.text, "status": cl.status,
                 "evidence": cl.evidence}
                for cl in self.clauses
            ],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)
