"""Report models shared by the topology checks, the verifier and the CLI."""

from __future__ import annotations

import json
from collections.abc import Iterable
from enum import StrEnum
from typing import Any

from pydantic import BaseModel, Field


class Verdict(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"
    DEGENERATE = "degenerate"
    SKIPPED = "skipped"


class Instance(BaseModel):
    ring: str
    Y: str


class CheckReport(BaseModel):
    id: str
    instance: Instance
    verdict: Verdict
    witness: dict[str, Any] | None = None
    notes: list[str] = Field(default_factory=list)
    examined: int = 0

    @property
    def ok(self) -> bool:
        return self.verdict != Verdict.FAIL


class RunInfo(BaseModel):
    seed: int
    caps: dict[str, int]


class RunReport(BaseModel):
    run: RunInfo
    results: list[CheckReport]
    summary: dict[str, int]

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2, sort_keys=True)

    @property
    def failed(self) -> bool:
        return self.summary.get(Verdict.FAIL.value, 0) > 0


def summarize(results: Iterable[CheckReport]) -> dict[str, int]:
    counts = {v.value: 0 for v in Verdict}
    for r in results:
        counts[r.verdict.value] += 1
    return counts
