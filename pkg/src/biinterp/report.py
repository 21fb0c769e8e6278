"""Structured pass/fail reports serialised to JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class StepResult:
    name: str
    passed: bool
    witness_formula: str | list[str] | None = None
    counterexample: Any = None
    detail: str | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.passed}
        if self.witness_formula is not None:
            out["witness_formula"] = self.witness_formula
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class VerificationReport:
    instance: str
    steps: list[StepResult] = field(default_factory=list)
    success_verdict: str = "pass"
    failure_verdict: str = "fail"

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)

    @property
    def verdict(self) -> str:
        return self.success_verdict if self.passed else self.failure_verdict

    def add(self, name: str, passed: bool, **kw) -> StepResult:
        step = StepResult(name, bool(passed), **kw)
        self.steps.append(step)
        return step

    def step(self, name: str) -> StepResult:
        for s in self.steps:
            if s.name == name:
                return s
        raise KeyError(name)

    def first_failure(self) -> StepResult | None:
        return next((s for s in self.steps if not s.passed), None)

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "steps": [s.to_json() for s in self.steps],
            "verdict": self.verdict,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)
