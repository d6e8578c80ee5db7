"""Tests for the ideal lattice and ideal arithmetic."""

from __future__ import annotations

from collections.abc import Callable

import pytest

from hyideals.config import Config
from hyideals.ideals import (
    Ideal,
    IdealLattice,
    all_ideals,
    annihilator,
    brute_force_ideals,
    colon,
    colon_ideal,
    ideal_generate,
    ideal_sum,
    intersect,
    intersect_all,
    is_semiprime,
    maxl,
    minl,
    product,
    radical,
)
from hyideals.ring import FiniteRing
from hyideals.validation import CapExceeded, ConsistencyError, RingMismatch, ValidationError

IdealMaker = Callable[..., Ideal]


def _labels(ideals: list[Ideal]) -> list[str]:
    return [i.label() for i in ideals]


class TestLattice:
    def test_z12_ideals(self, lattice12: IdealLattice) -> None:
        assert _labels(list(lattice12)) == ["(0)", "(6)", "(4)", "(3)", "(2)", "R"]

    def test_members_are_canonical_identity(self, z12: FiniteRing, ideal: IdealMaker) -> None:
        assert ideal(z12, 4).elements() == [0, 4, 8]
        assert ideal(z12, 8) == ideal(z12, 4)
        assert ideal(z12, 4, 6) == ideal(z12, 2)

    @pytest.mark.parametrize(
        ("dsl", "count"),
        [("Z30", 8), ("GF(4)", 2), ("Z4 x Z9", 9), ("Z2[x]/(x^2)", 3), ("Z2 x Z2 x Z2", 8)],
    )
    def test_lattice_sizes(
        self, ring_of: Callable[[str], FiniteRing], dsl: str, count: int
    ) -> None:
        assert len(all_ideals(ring_of(dsl))) == count

    def test_matches_brute_force(self, z12: FiniteRing, lattice12: IdealLattice) -> None:
        assert brute_force_ideals(z12) == [i.members for i in lattice12]

    def test_lattice_is_complete(self, lattice12: IdealLattice) -> None:
        assert lattice12.is_complete()
        assert lattice12.zero.label() == "(0)"
        assert lattice12.whole.is_whole

    def test_navigation(self, lattice12: IdealLattice) -> None:
        four = lattice12.principal(8)
        assert four.label() == "(4)"
        assert _labels(lattice12.above(four)) == ["(4)", "(2)", "R"]
        assert _labels(lattice12.below(lattice12.principal(6))) == ["(0)", "(6)"]
        assert len(lattice12.proper()) == 5

    def test_find_rejects_non_ideal(self, lattice12: IdealLattice) -> None:
        with pytest.raises(ConsistencyError, match="not an ideal"):
            lattice12.find(0b110)

    def test_lattice_cap(self, z12: FiniteRing) -> None:
        with pytest.raises(CapExceeded, match="lattice ring has 12 elements"):
            all_ideals(z12, Config(max_ring_size=8, max_table_size=8))

    def test_brute_force_cap(self, ring_of: Callable[[str], FiniteRing]) -> None:
        with pytest.raises(CapExceeded, match="limited to 16"):
            brute_force_ideals(ring_of("Z30"))


class TestOrder:
    def test_inclusion(self, z12: FiniteRing, ideal: IdealMaker) -> None:
        assert ideal(z12, 4) <= ideal(z12, 2)
        assert ideal(z12, 4) < ideal(z12, 2)
        assert not ideal(z12, 3) <= ideal(z12, 2)
        assert not ideal(z12, 2) < ideal(z12, 2)

    def test_maxl_minl(self, z12: FiniteRing, ideal: IdealMaker) -> None:
        family = [ideal(z12, 6), ideal(z12, 4), ideal(z12, 3), ideal(z12, 2)]
        assert _labels(maxl(family)) == ["(3)", "(2)"]
        assert _labels(minl(family)) == ["(6)", "(4)"]

    def test_mixed_rings_rejected(
        self, z12: FiniteRing, z4: FiniteRing, ideal: IdealMaker
    ) -> None:
        with pytest.raises(RingMismatch, match="different rings"):
            ideal_sum(ideal(z12, 2), ideal(z4, 2))


class TestArithmetic:
    def test_sum_product_meet(self, z12: FiniteRing, ideal: IdealMaker) -> None:
        assert ideal_sum(ideal(z12, 4), ideal(z12, 6)).label() == "(2)"
        assert product(ideal(z12, 2), ideal(z12, 3)).label() == "(6)"
        assert intersect(ideal(z12, 2), ideal(z12, 3)).label() == "(6)"
        assert product(ideal(z12, 2), ideal(z12, 2)).label() == "(4)"

    def test_empty_meet_is_whole_ring(self, z12: FiniteRing, lattice12: IdealLattice) -> None:
        assert intersect_all(z12, []).is_whole

    def test_colons(self, z12: FiniteRing, lattice12: IdealLattice, ideal: IdealMaker) -> None:
        assert colon(lattice12.zero, 4).label() == "(3)"
        assert colon(ideal(z12, 6), 2).label() == "(3)"
        assert colon_ideal(lattice12.zero, ideal(z12, 2)).label() == "(6)"

    def test_annihilator(self, z12: FiniteRing, lattice12: IdealLattice) -> None:
        assert annihilator(z12, 4).label() == "(3)"
        assert annihilator(z12, 1) == lattice12.zero
        assert annihilator(z12, 0).is_whole

    def test_radical(self, z12: FiniteRing, lattice12: IdealLattice, ideal: IdealMaker) -> None:
        assert radical(ideal(z12, 4)).label() == "(2)"
        assert radical(lattice12.zero).label() == "(6)"
        assert is_semiprime(ideal(z12, 6))
        assert not is_semiprime(ideal(z12, 4))
        assert not is_semiprime(lattice12.zero)

    def test_generator_outside_ring(self, z12: FiniteRing) -> None:
        with pytest.raises(ValidationError, match="not an element"):
            ideal_generate(z12, [99])
