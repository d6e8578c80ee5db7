"""Ideals as member bitsets, the full ideal lattice, and ideal arithmetic."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from hyideals.bitset import bits, is_subset, iter_bits, mask_of
from hyideals.config import Config
from hyideals.ring import FiniteRing
from hyideals.validation import (
    CapExceeded,
    ConsistencyError,
    RingMismatch,
    ValidationError,
    validate_ring_size,
)

logger = logging.getLogger(__name__)

# Subset brute force is 2^(N-1) candidate sets.
BRUTE_FORCE_MAX = 16


@dataclass(frozen=True, eq=False)
class Ideal:
    """An ideal identified by its member bitset; `generators` is only a witness."""

    ring: FiniteRing
    members: int
    generators: tuple[int, ...] = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring is other.ring and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __contains__(self, a: int) -> bool:
        return (self.members >> a) & 1 == 1

    def __le__(self, other: Ideal) -> bool:
        _same_ring(self, other)
        return is_subset(self.members, other.members)

    def __lt__(self, other: Ideal) -> bool:
        return self <= other and self.members != other.members

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.members)

    def __len__(self) -> int:
        return self.members.bit_count()

    def __repr__(self) -> str:
        return f"Ideal{self.label()}"

    @property
    def is_whole(self) -> bool:
        return self.members == self.ring.full_mask

    @property
    def is_proper(self) -> bool:
        return self.ring.one not in self

    @property
    def is_zero(self) -> bool:
        return self.members == 1 << self.ring.zero

    def elements(self) -> list[int]:
        return bits(self.members)

    def label(self) -> str:
        if self.is_whole:
            return "R"
        if self.is_zero:
            return "(0)"
        gens = [g for g in self.generators if g != self.ring.zero]
        if not gens:
            return "{" + ",".join(self.ring.label(a) for a in self) + "}"
        return "(" + ", ".join(self.ring.label(g) for g in gens) + ")"

    def to_json(self) -> list[int]:
        return self.elements()


def _same_ring(*ideals: Ideal) -> None:
    ring = ideals[0].ring
    for other in ideals[1:]:
        if other.ring is not ring:
            raise RingMismatch(f"Ideals belong to different rings ({ring.name}, {other.ring.name})")


def order_key(ideal: Ideal) -> tuple[int, int]:
    return ideal.members.bit_count(), ideal.members


# -- Mask-level arithmetic --


def principal_mask(ring: FiniteRing, a: int) -> int:
    """Members of <a> = Ra (commutative with identity)."""
    return mask_of(ring.mul(r, a) for r in ring.elements)


def sum_masks(ring: FiniteRing, m1: int, m2: int) -> int:
    if is_subset(m1, m2):
        return m2
    if is_subset(m2, m1):
        return m1
    right = bits(m2)
    return mask_of(ring.add(a, b) for a in iter_bits(m1) for b in right)


def generate_mask(ring: FiniteRing, elements: Iterable[int]) -> int:
    mask = 1 << ring.zero
    for a in elements:
        if not (mask >> a) & 1:
            mask = sum_masks(ring, mask, principal_mask(ring, a))
    return mask


def is_ideal_mask(ring: FiniteRing, mask: int) -> bool:
    if not (mask >> ring.zero) & 1:
        return False
    members = bits(mask)
    for a in members:
        for b in members:
            if not (mask >> ring.add(a, b)) & 1:
                return False
        for r in ring.elements:
            if not (mask >> ring.mul(r, a)) & 1:
                return False
    return True


def canonical(ring: FiniteRing, mask: int) -> Ideal:
    """The lattice's instance for `mask` when the lattice is known."""
    lattice = ring._memo.get("lattice")
    if isinstance(lattice, IdealLattice):
        found = lattice.get(mask)
        if found is not None:
            return found
    return Ideal(ring, mask, tuple(bits(mask)))


# -- Lattice --


class IdealLattice:
    """Every ideal of a ring exactly once, ordered by (cardinality, bitset)."""

    def __init__(self, ring: FiniteRing, ideals: Iterable[Ideal]) -> None:
        self.ring = ring
        self.ideals = tuple(sorted(ideals, key=order_key))
        self._by_mask = {ideal.members: ideal for ideal in self.ideals}
        self._position = {ideal.members: i for i, ideal in enumerate(self.ideals)}
        self.zero = self._by_mask[1 << ring.zero]
        self.whole = self._by_mask[ring.full_mask]

    def __iter__(self) -> Iterator[Ideal]:
        return iter(self.ideals)

    def __len__(self) -> int:
        return len(self.ideals)

    def get(self, mask: int) -> Ideal | None:
        return self._by_mask.get(mask)

    def find(self, mask: int) -> Ideal:
        found = self._by_mask.get(mask)
        if found is None:
            raise ConsistencyError(f"{bits(mask)} is not an ideal of {self.ring.name}")
        return found

    def index_of(self, ideal: Ideal) -> int:
        return self._position[ideal.members]

    def principal(self, a: int) -> Ideal:
        return self.find(principal_mask(self.ring, a))

    def above(self, ideal: Ideal) -> list[Ideal]:
        return [j for j in self.ideals if is_subset(ideal.members, j.members)]

    def below(self, ideal: Ideal) -> list[Ideal]:
        return [j for j in self.ideals if is_subset(j.members, ideal.members)]

    def proper(self) -> list[Ideal]:
        return [j for j in self.ideals if j.is_proper]

    def is_complete(self) -> bool:
        """Contains 0 and R and is closed under pairwise sum and intersection."""
        masks = [i.members for i in self.ideals]
        return all(
            (a & b) in self._by_mask and sum_masks(self.ring, a, b) in self._by_mask
            for a in masks
            for b in masks
        )


def all_ideals(ring: FiniteRing, config: Config | None = None) -> IdealLattice:
    """Enumerate the ideal lattice: principal ideals closed under pairwise sums."""
    cached = ring._memo.get("lattice")
    if isinstance(cached, IdealLattice):
        return cached
    config = config or Config()
    validate_ring_size(ring.size, max(config.max_ring_size, config.max_table_size), "lattice")
    generators: dict[int, tuple[int, ...]] = {}
    principals: list[int] = []
    for a in ring.elements:
        mask = principal_mask(ring, a)
        if mask not in generators:
            generators[mask] = (a,)
            principals.append(mask)
    frontier = list(principals)
    while frontier:
        fresh = []
        for mask in frontier:
            for p in principals:
                total = sum_masks(ring, mask, p)
                if total not in generators:
                    generators[total] = generators[mask] + generators[p]
                    fresh.append(total)
        frontier = fresh
    lattice = IdealLattice(ring, (Ideal(ring, m, g) for m, g in generators.items()))
    ring._memo["lattice"] = lattice
    logger.debug("%s has %d ideals", ring.name, len(lattice))
    return lattice


def brute_force_ideals(ring: FiniteRing) -> list[int]:
    """Independent oracle: filter every subset containing zero by the ideal axioms."""
    if ring.size > BRUTE_FORCE_MAX:
        raise CapExceeded(f"Brute-force ideal search is limited to {BRUTE_FORCE_MAX} elements")
    others = [a for a in ring.elements if a != ring.zero]
    found = []
    for choice in range(1 << len(others)):
        mask = (1 << ring.zero) | mask_of(others[i] for i in iter_bits(choice))
        if is_ideal_mask(ring, mask):
            found.append(mask)
    return sorted(found, key=lambda m: (m.bit_count(), m))


# -- Ideal arithmetic --


def ideal_generate(ring: FiniteRing, gens: Iterable[int]) -> Ideal:
    gens = tuple(dict.fromkeys(gens))
    for g in gens:
        if not (0 <= g < ring.size):
            raise ValidationError(f"Generator {g} is not an element of {ring.name}")
    return Ideal(ring, generate_mask(ring, gens), gens)


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    _same_ring(i, j)
    return canonical(i.ring, sum_masks(i.ring, i.members, j.members))


def product(i: Ideal, j: Ideal) -> Ideal:
    _same_ring(i, j)
    ring = i.ring
    right = j.elements()
    return canonical(ring, generate_mask(ring, (ring.mul(a, b) for a in i for b in right)))


def intersect(i: Ideal, j: Ideal) -> Ideal:
    _same_ring(i, j)
    return canonical(i.ring, i.members & j.members)


def intersect_all(ring: FiniteRing, ideals: Iterable[Ideal]) -> Ideal:
    """Intersection of a family; the empty family gives R."""
    mask = ring.full_mask
    for ideal in ideals:
        if ideal.ring is not ring:
            raise RingMismatch(f"Ideal of {ideal.ring.name} used with {ring.name}")
        mask &= ideal.members
    return canonical(ring, mask)


def colon(i: Ideal, a: int) -> Ideal:
    """(I:a) = {x : a*x in I}."""
    ring = i.ring
    return canonical(ring, mask_of(x for x in ring.elements if ring.mul(a, x) in i))


def colon_ideal(k: Ideal, i: Ideal) -> Ideal:
    """(K:I) = intersection of (K:a) over a in I."""
    _same_ring(k, i)
    mask = k.ring.full_mask
    for a in i:
        mask &= colon(k, a).members
    return canonical(k.ring, mask)


def annihilator(ring: FiniteRing, a: int) -> Ideal:
    return colon(canonical(ring, 1 << ring.zero), a)


def radical(i: Ideal) -> Ideal:
    ring = i.ring
    return canonical(
        ring, mask_of(x for x in ring.elements if any(p in i for p in ring.powers(x)))
    )


def is_semiprime(i: Ideal) -> bool:
    """I = sqrt(I), cross-checked against I = intersection of Min(I)."""
    from hyideals.spectrum import min_over

    by_radical = radical(i) == i
    by_primes = intersect_all(i.ring, min_over(i)) == i
    if by_radical != by_primes:
        raise ConsistencyError(f"Semiprimality routes disagree on {i.label()}")
    return by_radical


# -- Posets --


def maxl(ideals: Iterable[Ideal]) -> list[Ideal]:
    """Inclusion-maximal members of a family, in the family's order."""
    family = list(dict.fromkeys(ideals))
    return [
        i for i in family if not any(i.members != j.members and i <= j for j in family)
    ]


def minl(ideals: Iterable[Ideal]) -> list[Ideal]:
    family = list(dict.fromkeys(ideals))
    return [
        i for i in family if not any(i.members != j.members and j <= i for j in family)
    ]
