"""Corpus files: the rings, subspace selectors, check filter and caps of a verifier run."""

from __future__ import annotations

import json
import logging
from importlib.resources import files
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from pydantic import ValidationError as SchemaError

from hyideals.dsl import parse_ring_dsl
from hyideals.ring import RingSpec, TablesSpec
from hyideals.validation import CorpusError, ValidationError, validate_selector

logger = logging.getLogger(__name__)

DEFAULT_CORPUS = "default"


class CorpusRing(BaseModel):
    """One named ring, given either as DSL text or as explicit tables."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str
    dsl: str | None = None
    tables: TablesSpec | None = None

    @model_validator(mode="after")
    def _one_source(self) -> CorpusRing:
        if (self.dsl is None) == (self.tables is None):
            raise ValueError(f"ring {self.name!r} needs exactly one of 'dsl' or 'tables'")
        return self

    def spec(self) -> RingSpec:
        if self.tables is not None:
            return self.tables
        assert self.dsl is not None
        return parse_ring_dsl(self.dsl)


class CorpusFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    rings: list[CorpusRing] = Field(default_factory=list)
    subspaces: list[str] = Field(default_factory=lambda: ["all-subsets"])
    checks: list[str] | None = None
    caps: dict[str, int] | None = None

    @field_validator("rings")
    @classmethod
    def _unique_names(cls, rings: list[CorpusRing]) -> list[CorpusRing]:
        seen: set[str] = set()
        for ring in rings:
            if ring.name in seen:
                raise ValueError(f"duplicate ring name {ring.name!r}")
            seen.add(ring.name)
        return rings


def parse_corpus(data: dict[str, Any] | str) -> CorpusFile:
    """Validate corpus JSON (text or decoded) and check every DSL string parses."""
    try:
        raw = json.loads(data) if isinstance(data, str) else data
    except json.JSONDecodeError as e:
        raise CorpusError(f"Corpus is not valid JSON: {e}")
    try:
        corpus = CorpusFile.model_validate(raw)
    except SchemaError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "corpus"
        raise CorpusError(f"Invalid corpus at {where}: {first['msg']}")
    for ring in corpus.rings:
        try:
            ring.spec()
        except ValidationError as e:
            raise CorpusError(f"Ring {ring.name!r}: {e.message}")
    for selector in corpus.subspaces:
        try:
            validate_selector(selector)
        except ValidationError as e:
            raise CorpusError(e.message)
    return corpus


def load_corpus(source: str | Path = DEFAULT_CORPUS) -> CorpusFile:
    """Load the bundled corpus by name or a corpus file by path."""
    if str(source) == DEFAULT_CORPUS:
        text = (files("hyideals") / "data" / "default_corpus.json").read_text("utf-8")
    else:
        path = Path(source)
        try:
            text = path.read_text("utf-8")
        except OSError as e:
            raise CorpusError(f"Cannot read corpus {str(path)!r}: {e.strerror}")
    corpus = parse_corpus(text)
    logger.info("loaded corpus %s with %d ring(s)", source, len(corpus.rings))
    return corpus


def corpus_to_json(corpus: CorpusFile) -> str:
    return json.dumps(corpus.model_dump(mode="json", exclude_none=True), indent=2)
