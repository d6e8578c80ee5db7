"""Query layer shared by the CLI and the tool server."""

from __future__ import annotations

import logging
import threading
from collections.abc import Iterable, Sequence
from typing import Any

from hyideals.calculus import (
    filter_intersection,
    hy_closure,
    hy_condition_profile,
    hy_inverse_image,
    is_fixed,
    is_fixed_wrt,
    is_hy_ideal,
    is_strong_hy_ideal,
    maximal_fixed,
    strong_condition_profile,
    strong_hy_closure,
)
from hyideals.config import Config
from hyideals.corpus import CorpusFile, load_corpus
from hyideals.dsl import parse_ring_dsl
from hyideals.ideals import Ideal, all_ideals, ideal_generate
from hyideals.relative import factor_report, greatest_factor, is_relative_hy, is_relative_strong_hy
from hyideals.report import CheckReport, RunReport
from hyideals.ring import FiniteRing, build_ring, has_root_property, is_arithmetical, is_regular
from hyideals.spectrum import (
    affiliated_primes,
    bourbaki,
    jacobson_radical,
    max_ideals,
    min_primes,
    nilradical,
    spec,
)
from hyideals.topology import SubSpace, select_subspace
from hyideals.validation import ValidationError, parse_indices_selector
from hyideals.verifier import run_all, run_one, separation_search

logger = logging.getLogger(__name__)


def _labels(ideals: Iterable[Ideal]) -> list[str]:
    return [i.label() for i in ideals]


class Workbench:
    """Builds rings from DSL text once and answers queries about them as plain dicts."""

    def __init__(self, config: Config | None = None) -> None:
        self.config = config or Config()
        self._rings: dict[str, FiniteRing] = {}
        self._lock = threading.Lock()

    def ring(self, dsl: str) -> FiniteRing:
        key = " ".join(dsl.split())
        with self._lock:
            ring = self._rings.get(key)
            if ring is None:
                ring = build_ring(parse_ring_dsl(dsl), self.config, key)
                self._rings[key] = ring
                logger.debug("built %s with %d elements", key, ring.size)
        return ring

    def ideal(self, ring: FiniteRing, generators: Sequence[str]) -> Ideal:
        if not generators:
            raise ValidationError("At least one generator is required")
        gens = [ring.parse_element(g) for g in generators]
        return all_ideals(ring, self.config).find(ideal_generate(ring, gens).members)

    def subspace(self, ring: FiniteRing, selector: str) -> SubSpace:
        return select_subspace(ring, selector, self.config)

    def _describe(self, ideal: Ideal) -> dict[str, Any]:
        ring = ideal.ring
        return {"label": ideal.label(), "members": [ring.label(a) for a in ideal]}

    def _query(self, dsl: str, y: str, generators: Sequence[str]) -> tuple[Ideal, SubSpace]:
        ring = self.ring(dsl)
        return self.ideal(ring, generators), self.subspace(ring, y)

    # -- Ring queries --

    def ring_show(self, dsl: str) -> dict[str, Any]:
        ring = self.ring(dsl)
        labels = ring.labels()
        return {
            "ring": ring.name,
            "size": ring.size,
            "elements": list(labels),
            "units": [labels[a] for a in ring.units()],
            "idempotents": [labels[a] for a in ring.idempotents()],
            "nilpotents": [labels[a] for a in ring.nilpotents()],
            "local": ring.is_local(),
            "reduced": ring.is_reduced(),
            "regular": is_regular(ring),
            "root_property": has_root_property(ring),
            "arithmetical": is_arithmetical(ring, self.config),
        }

    def ideals(self, dsl: str) -> dict[str, Any]:
        ring = self.ring(dsl)
        lattice = all_ideals(ring, self.config)
        return {
            "ring": ring.name,
            "count": len(lattice),
            "ideals": [self._describe(i) for i in lattice],
        }

    def spectrum(self, dsl: str) -> dict[str, Any]:
        ring = self.ring(dsl)
        return {
            "ring": ring.name,
            "spec": _labels(spec(ring, self.config)),
            "max": _labels(max_ideals(ring)),
            "min": _labels(min_primes(ring)),
            "bourbaki": _labels(bourbaki(all_ideals(ring, self.config).zero)),
            "affiliated": _labels(affiliated_primes(ring)),
            "jacobson": jacobson_radical(ring).label(),
            "nilradical": nilradical(ring).label(),
        }

    # -- H_Y queries --

    def hy_check(self, dsl: str, y: str, ideal: Sequence[str]) -> dict[str, Any]:
        i, subspace = self._query(dsl, y, ideal)
        return {
            "ring": i.ring.name,
            "Y": subspace.label,
            "ideal": self._describe(i),
            "hy": is_hy_ideal(i, subspace),
            "strong": is_strong_hy_ideal(i, subspace),
            "fixed": is_fixed(i, subspace),
            "profile": hy_condition_profile(i, subspace, self.config).to_dict(),
            "strong_profile": strong_condition_profile(i, subspace, self.config).to_dict(),
        }

    def hy_closure(self, dsl: str, y: str, ideal: Sequence[str]) -> dict[str, Any]:
        i, subspace = self._query(dsl, y, ideal)
        return {
            "ring": i.ring.name,
            "Y": subspace.label,
            "ideal": self._describe(i),
            "closure": self._describe(hy_closure(i, subspace)),
            "strong_closure": self._describe(strong_hy_closure(i, subspace)),
            "kh": self._describe(subspace.kh(i)),
        }

    def fixed(
        self, dsl: str, y: str, ideal: Sequence[str], wrt: str | None = None
    ) -> dict[str, Any]:
        i, subspace = self._query(dsl, y, ideal)
        out: dict[str, Any] = {
            "ring": i.ring.name,
            "Y": subspace.label,
            "ideal": self._describe(i),
            "fixed": is_fixed(i, subspace),
            "filter_intersection": _labels(filter_intersection(i, subspace).points()),
            "inverse_image": hy_inverse_image(i, subspace).label(),
            "maximal_fixed": _labels(maximal_fixed(subspace)),
        }
        if wrt is not None:
            indices = parse_indices_selector(wrt)
            if indices is None or any(k >= len(subspace) for k in indices):
                raise ValidationError(
                    f"--wrt must be indices:[...] into the {len(subspace)} point(s) of Y"
                )
            mask = sum(1 << k for k in set(indices))
            subset = subspace.point_set(mask)
            out["wrt"] = _labels(subset.points())
            out["fixed_wrt"] = is_fixed_wrt(i, subset, subspace)
        return out

    def relative(self, dsl: str, y: str, ideal: Sequence[str]) -> dict[str, Any]:
        i, subspace = self._query(dsl, y, ideal)
        report = factor_report(i, subspace)
        plain = greatest_factor(i, subspace)
        strong = greatest_factor(i, subspace, strong=True)
        return {
            "ring": i.ring.name,
            "Y": subspace.label,
            "ideal": self._describe(i),
            "relative": bool(is_relative_hy(i, subspace)),
            "relative_strong": bool(is_relative_strong_hy(i, subspace)),
            "greatest_factor": {"label": plain.ideal.label(), "trivial": plain.trivial},
            "strong_greatest_factor": {"label": strong.ideal.label(), "trivial": strong.trivial},
            **{k: v for k, v in report.to_dict().items() if k != "ideal"},
        }

    # -- Verification --

    def verify(
        self, corpus: str | CorpusFile = "default", check_ids: Sequence[str] | None = None
    ) -> RunReport:
        loaded = corpus if isinstance(corpus, CorpusFile) else load_corpus(corpus)
        return run_all(loaded, self.config, check_ids=check_ids)

    def run_one(self, check_id: str, dsl: str, y: str = "spec") -> list[dict[str, Any]]:
        ring = self.ring(dsl)
        reports = run_one(check_id, ring, y, self.config)
        return [r.model_dump(mode="json") for r in reports]

    def separation(self, corpus: str | CorpusFile = "default") -> CheckReport:
        loaded = corpus if isinstance(corpus, CorpusFile) else load_corpus(corpus)
        return separation_search(loaded, self.config)
