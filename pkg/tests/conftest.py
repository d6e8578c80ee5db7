"""Shared test fixtures."""

from __future__ import annotations

from collections.abc import Callable

import pytest

from hyideals.config import Config
from hyideals.dsl import parse_ring_dsl
from hyideals.ideals import Ideal, IdealLattice, all_ideals, ideal_generate
from hyideals.ring import FiniteRing, build_ring
from hyideals.topology import SubSpace, select_subspace
from hyideals.workbench import Workbench

IdealMaker = Callable[..., Ideal]


def _ring(dsl: str) -> FiniteRing:
    return build_ring(parse_ring_dsl(dsl), Config(), dsl)


@pytest.fixture
def config() -> Config:
    return Config()


@pytest.fixture
def ring_of() -> Callable[[str], FiniteRing]:
    """Build a ring from DSL text, named by that text."""
    return _ring


@pytest.fixture
def z12() -> FiniteRing:
    return _ring("Z12")


@pytest.fixture
def z4() -> FiniteRing:
    return _ring("Z4")


@pytest.fixture
def lattice12(z12: FiniteRing) -> IdealLattice:
    return all_ideals(z12)


@pytest.fixture
def spec12(z12: FiniteRing) -> SubSpace:
    """Y = Spec(Z12), points ordered (3), (2)."""
    return select_subspace(z12, "spec")


@pytest.fixture
def ideal() -> IdealMaker:
    """ideal(ring, *gens): the lattice instance generated by element indices or labels."""

    def make(ring: FiniteRing, *gens: int | str) -> Ideal:
        elements = [g if isinstance(g, int) else ring.parse_element(g) for g in gens]
        return all_ideals(ring).find(ideal_generate(ring, elements).members)

    return make


@pytest.fixture
def bench() -> Workbench:
    return Workbench(Config())
