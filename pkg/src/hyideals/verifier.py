"""Theorem-check registry and the runner that evaluates it over (ring, Y) instances."""

from __future__ import annotations

import itertools
import logging
import random
import time
from collections.abc import Callable, Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cache
from typing import TYPE_CHECKING, Any, Literal

from hyideals.bitset import bits
from hyideals.calculus import separation_instance
from hyideals.config import Config
from hyideals.ideals import Ideal, IdealLattice, all_ideals
from hyideals.report import CheckReport, Instance, RunInfo, RunReport, Verdict, summarize
from hyideals.ring import FiniteRing, RingSpec, build_ring
from hyideals.topology import SubSpace, enumerate_subspaces
from hyideals.validation import (
    CapExceeded,
    ConsistencyError,
    CorpusError,
    UnknownCheckId,
    ValidationError,
    validate_check_ids,
)

if TYPE_CHECKING:
    from hyideals.corpus import CorpusFile

logger = logging.getLogger(__name__)

SEPARATION_ID = "separation-search"
RING_SCOPE_LABEL = "*"
MAX_NOTES = 5

Scope = Literal["subspace", "ring"]


# -- Registry --


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    description: str
    body: Callable[[CheckContext, Tally], None]
    scope: Scope = "subspace"
    premise: str = ""


def _alias_key(label: str) -> str:
    # C3.3(a) and C3.3a name the same result
    return label.strip().replace("(", "").replace(")", "")


class Registry:
    """Check ids mapped to their bodies; filled by each checks module's register_checks."""

    def __init__(self) -> None:
        self._checks: dict[str, TheoremCheck] = {}
        self._aliases: dict[str, str] = {}

    def check(
        self, check_id: str, description: str, *, scope: Scope = "subspace", premise: str = ""
    ) -> Callable[[Callable[[CheckContext, Tally], None]], Callable[[CheckContext, Tally], None]]:
        def decorator(
            body: Callable[[CheckContext, Tally], None],
        ) -> Callable[[CheckContext, Tally], None]:
            if check_id in self._checks:
                raise ValueError(f"Duplicate check id {check_id!r}")
            self._checks[check_id] = TheoremCheck(check_id, description, body, scope, premise)
            return body

        return decorator

    def alias(self, short: str, check_id: str) -> None:
        """Let a short result label such as `T3.9` stand for a registered check id."""
        if check_id not in self._checks:
            raise ValueError(f"Alias {short!r} names unregistered check {check_id!r}")
        key = _alias_key(short)
        if key in self._aliases:
            raise ValueError(f"Duplicate alias {short!r}")
        self._aliases[key] = check_id

    def aliases(self) -> dict[str, str]:
        return dict(self._aliases)

    def resolve(self, check_id: str) -> str:
        """The registered id for a check id or a short alias."""
        if check_id in self._checks:
            return check_id
        try:
            return self._aliases[_alias_key(check_id)]
        except KeyError:
            raise UnknownCheckId(f"Unknown check id: {check_id!r}")

    def __contains__(self, check_id: str) -> bool:
        return check_id in self._checks or _alias_key(check_id) in self._aliases

    def __len__(self) -> int:
        return len(self._checks)

    def __iter__(self) -> Iterator[TheoremCheck]:
        return iter(self._checks.values())

    def ids(self) -> list[str]:
        return list(self._checks)

    def get(self, check_id: str) -> TheoremCheck:
        return self._checks[self.resolve(check_id)]


@cache
def default_registry() -> Registry:
    from hyideals.checks import build_registry

    return build_registry()


# -- Per-instance state --


@dataclass
class Tally:
    """What one check saw on one instance: tuples examined, first witness, notes."""

    examined: int = 0
    witness: dict[str, Any] | None = None
    notes: list[str] = field(default_factory=list)
    skipped: str | None = None
    _hidden_notes: int = 0

    @property
    def failed(self) -> bool:
        return self.witness is not None

    def fail(self, **witness: Any) -> None:
        if self.witness is None:
            self.witness = witness

    def expect(self, holds: bool, **witness: Any) -> bool:
        """Count one examined instance and record the witness when it fails."""
        self.examined += 1
        if not holds:
            self.fail(**witness)
        return holds

    def note(self, text: str) -> None:
        if text in self.notes:
            return
        if len(self.notes) < MAX_NOTES:
            self.notes.append(text)
        else:
            self._hidden_notes += 1

    def skip(self, reason: str) -> None:
        self.skipped = reason

    def final_notes(self) -> list[str]:
        if self._hidden_notes:
            return [*self.notes, f"{self._hidden_notes} further note(s) omitted"]
        return list(self.notes)


@dataclass
class CheckContext:
    ring: FiniteRing
    subspace: SubSpace | None
    config: Config
    check_id: str = ""

    @property
    def lattice(self) -> IdealLattice:
        return all_ideals(self.ring, self.config)

    @property
    def y(self) -> SubSpace:
        if self.subspace is None:
            raise ConsistencyError(f"{self.check_id} needs a subspace")
        return self.subspace

    @property
    def label(self) -> str:
        return self.subspace.label if self.subspace is not None else RING_SCOPE_LABEL

    def rng(self, salt: str = "") -> random.Random:
        key = f"{self.config.seed}:{self.check_id}:{self.ring.name}:{self.label}:{salt}"
        return random.Random(key)

    def tuples(self, k: int, pool: Sequence[Ideal] | None = None) -> Iterator[tuple[Ideal, ...]]:
        """k-tuples of ideals: exhaustive on small rings or within budget, else sampled."""
        pool = list(self.lattice if pool is None else pool)
        if not pool:
            return
        total = len(pool) ** k
        budget = self.config.tuple_budget
        if self.ring.size <= self.config.exhaustive_ring_max or total <= budget:
            yield from itertools.product(pool, repeat=k)
            return
        logger.debug(
            "%s on %s/%s: sampling %d of %d tuples",
            self.check_id,
            self.ring.name,
            self.label,
            budget,
            total,
        )
        rng = self.rng(f"tuples{k}")
        for _ in range(budget):
            yield tuple(rng.choice(pool) for _ in range(k))

    def point_subsets(self) -> list[int]:
        """Masks of subsets S of Y: all of them for small Y, else a seeded sample."""
        y = self.y
        if len(y) <= self.config.all_subsets_max_spec:
            return list(range(1 << len(y)))
        rng = self.rng("subsets")
        sample = {0, y.full}
        sample.update(rng.getrandbits(len(y)) for _ in range(self.config.sampled_subspaces))
        return sorted(sample)

    def subspaces(self) -> list[SubSpace]:
        return enumerate_subspaces(self.ring, ["all-subsets"], self.config)


# -- Running --


def _resolve(check: TheoremCheck, ctx: CheckContext, tally: Tally) -> CheckReport:
    notes = tally.final_notes()
    if tally.witness is not None:
        verdict = Verdict.FAIL
    elif tally.skipped is not None:
        verdict = Verdict.SKIPPED
        notes.append(f"skipped: {tally.skipped}")
    elif tally.examined == 0:
        verdict = Verdict.VACUOUS
        notes.append(f"premise never met: {check.premise or 'no instance'}")
    elif ctx.subspace is not None and ctx.subspace.is_empty:
        verdict = Verdict.DEGENERATE
    else:
        verdict = Verdict.PASS
    return CheckReport(
        id=check.id,
        instance=Instance(ring=ctx.ring.name, Y=ctx.label),
        verdict=verdict,
        witness=tally.witness,
        notes=notes,
        examined=tally.examined,
    )


def run_check(
    check: TheoremCheck, ring: FiniteRing, subspace: SubSpace | None, config: Config
) -> CheckReport:
    """Run one check on one instance; internal disagreements become fail reports."""
    ctx = CheckContext(ring, subspace if check.scope == "subspace" else None, config, check.id)
    tally = Tally()
    started = time.perf_counter()
    try:
        check.body(ctx, tally)
    except ConsistencyError as e:
        tally.fail(error=str(e))
    except CapExceeded as e:
        tally.skip(e.message)
    report = _resolve(check, ctx, tally)
    elapsed = time.perf_counter() - started
    logger.debug(
        "%s %s/%s -> %s in %.3fs", check.id, ring.name, ctx.label, report.verdict, elapsed
    )
    if report.verdict is Verdict.SKIPPED:
        logger.warning("%s skipped on %s/%s: %s", check.id, ring.name, ctx.label, tally.skipped)
    elif report.notes and report.verdict is not Verdict.VACUOUS:
        logger.debug(
            "%s on %s/%s emitted %d note(s)", check.id, ring.name, ctx.label, len(report.notes)
        )
    return report


def run_ring(
    ring: FiniteRing, checks: Iterable[TheoremCheck], selectors: Sequence[str], config: Config
) -> list[CheckReport]:
    """Ring-scope checks once, then every subspace-scope check per subspace."""
    checks = list(checks)
    results = [run_check(c, ring, None, config) for c in checks if c.scope == "ring"]
    subspace_checks = [c for c in checks if c.scope == "subspace"]
    if subspace_checks:
        for subspace in enumerate_subspaces(ring, selectors, config):
            results.extend(run_check(c, ring, subspace, config) for c in subspace_checks)
    return results


Job = tuple[str, RingSpec, tuple[str, ...], tuple[str, ...], Config]


def _run_job(job: Job) -> list[CheckReport]:
    name, spec, selectors, check_ids, config = job
    registry = default_registry()
    ring = build_ring(spec, config, name)
    return run_ring(ring, (registry.get(i) for i in check_ids), selectors, config)


def run_all(
    corpus: CorpusFile,
    config: Config | None = None,
    registry: Registry | None = None,
    check_ids: Sequence[str] | None = None,
) -> RunReport:
    """Run the registry (or a subset of it) over every corpus ring and subspace."""
    config = (config or Config()).with_caps(corpus.caps)
    registry = registry if registry is not None else default_registry()
    ids = list(check_ids or corpus.checks or registry.ids())
    validate_check_ids(ids, registry)
    ids = [registry.resolve(i) for i in ids]
    jobs: list[Job] = []
    for entry in corpus.rings:
        try:
            spec = entry.spec()
        except ValidationError as e:
            raise CorpusError(f"Ring {entry.name!r}: {e.message}")
        jobs.append((entry.name, spec, tuple(corpus.subspaces), tuple(ids), config))
    logger.info("verifying %d check(s) over %d ring(s)", len(ids), len(jobs))
    results: list[CheckReport] = []
    if config.workers > 1 and len(jobs) > 1:
        if registry is not default_registry():
            raise ValueError("A custom registry cannot run in worker processes")
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for chunk in pool.map(_run_job, jobs):
                results.extend(chunk)
    else:
        for name, spec, selectors, _, _ in jobs:
            try:
                ring = build_ring(spec, config, name)
            except ValidationError as e:
                raise CorpusError(f"Ring {name!r}: {e.message}")
            results.extend(run_ring(ring, (registry.get(i) for i in ids), selectors, config))
    noted = sum(1 for r in results if r.notes and r.verdict is not Verdict.VACUOUS)
    if noted:
        logger.warning("%d report(s) carry notes", noted)
    summary = summarize(results)
    logger.info("verification finished: %s", summary)
    return RunReport(
        run=RunInfo(seed=config.seed, caps=config.caps()), results=results, summary=summary
    )


def run_one(
    check_id: str,
    ring: FiniteRing,
    selector: str = "spec",
    config: Config | None = None,
    registry: Registry | None = None,
) -> list[CheckReport]:
    """One check against one ring; a selector naming several subspaces gives one report each."""
    config = config or Config()
    check = (registry if registry is not None else default_registry()).get(check_id)
    return run_ring(ring, [check], [selector], config)


def separation_search(corpus: CorpusFile, config: Config | None = None) -> CheckReport:
    """Scan every (ring, Y, I) for an H_Y-ideal that is not strong."""
    config = (config or Config()).with_caps(corpus.caps)
    found: list[dict[str, Any]] = []
    notes: list[str] = []
    examined = 0
    for entry in corpus.rings:
        try:
            ring = build_ring(entry.spec(), config, entry.name)
        except ValidationError as e:
            raise CorpusError(f"Ring {entry.name!r}: {e.message}")
        scanned = 0
        for subspace in enumerate_subspaces(ring, corpus.subspaces, config):
            for ideal in all_ideals(ring, config):
                scanned += 1
                if separation_instance(ideal, subspace):
                    found.append(
                        {"ring": ring.name, "Y": subspace.label, "ideal": bits(ideal.members)}
                    )
        notes.append(f"{ring.name}: {scanned} instance(s) scanned")
        examined += scanned
    if not found:
        notes.append("no H_Y-ideal that is not strong was found")
    return CheckReport(
        id=SEPARATION_ID,
        instance=Instance(ring="corpus", Y=",".join(corpus.subspaces)),
        verdict=Verdict.FAIL if found else Verdict.PASS,
        witness={"instances": found} if found else None,
        notes=notes,
        examined=examined,
    )
