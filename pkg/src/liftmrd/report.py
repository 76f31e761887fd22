"""Uniform pass/fail report used by the verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    status: str
    parameters: dict
    counterexample: object = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.status == "pass"

    def __bool__(self):
        return self.ok

    def as_dict(self):
        out = {"status": self.status, "parameters": self.parameters}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        out.update(self.details)
        return out
