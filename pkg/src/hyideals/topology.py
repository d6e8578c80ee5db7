"""Zariski topology on a subspace Y of Spec(R): hulls, kernels, closures, compactness."""

from __future__ import annotations

import logging
import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import TYPE_CHECKING

from hyideals.bitset import bits, full_mask, is_subset, iter_bits, mask_of
from hyideals.config import Config
from hyideals.ideals import Ideal, all_ideals, intersect_all, maxl
from hyideals.report import CheckReport, Instance, Verdict
from hyideals.ring import FiniteRing
from hyideals.spectrum import is_prime, max_ideals, min_primes, spec
from hyideals.validation import (
    CapExceeded,
    ConsistencyError,
    NonPrimeMaximalStrongIdeal,
    RingMismatch,
    ValidationError,
    parse_indices_selector,
    validate_selector,
)

if TYPE_CHECKING:
    from hyideals.calculus import SubsetIndex

logger = logging.getLogger(__name__)

COVER_CHECK_MAX = 16


class SubSpace:
    """An ordered set Y of distinct primes of one ring.

    Element hulls are precomputed as bitmasks over `points`; kernels and
    closures are memoized per point mask.
    """

    def __init__(self, ring: FiniteRing, points: Iterable[Ideal], label: str = "custom") -> None:
        points = tuple(points)
        if len({p.members for p in points}) != len(points):
            raise ValidationError("Subspace points must be distinct")
        for p in points:
            if p.ring is not ring:
                raise RingMismatch(f"Point {p.label()} does not belong to {ring.name}")
            if not is_prime(p):
                raise ValidationError(f"Subspace point {p.label()} is not prime")
        self.ring = ring
        self.points = points
        self.label = label
        self.full = full_mask(len(points))
        self._element_hulls = tuple(
            mask_of(i for i, p in enumerate(points) if a in p) for a in ring.elements
        )
        self._kernels: dict[int, Ideal] = {}
        self._memo: dict[tuple, object] = {}
        self._subset_index: SubsetIndex | None = None

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Ideal]:
        return iter(self.points)

    def __repr__(self) -> str:
        return f"SubSpace({self.ring.name}, {self.label}, {[p.label() for p in self.points]})"

    @property
    def is_empty(self) -> bool:
        return not self.points

    def point_masks(self) -> frozenset[int]:
        return frozenset(p.members for p in self.points)

    def element_hull(self, a: int) -> int:
        return self._element_hulls[a]

    def ideal_hull(self, ideal: Ideal) -> int:
        return mask_of(i for i, p in enumerate(self.points) if is_subset(ideal.members, p.members))

    def set_hull(self, elements: Iterable[int]) -> int:
        mask = self.full
        for a in elements:
            mask &= self._element_hulls[a]
        return mask

    def kernel_of(self, mask: int) -> Ideal:
        found = self._kernels.get(mask)
        if found is None:
            found = intersect_all(self.ring, (self.points[i] for i in iter_bits(mask)))
            self._kernels[mask] = found
        return found

    def kh_element(self, a: int) -> Ideal:
        return self.kernel_of(self._element_hulls[a])

    def kh(self, ideal: Ideal) -> Ideal:
        return self.kernel_of(self.ideal_hull(ideal))

    @property
    def kernel_all(self) -> Ideal:
        """K0, the intersection of every point of Y."""
        return self.kernel_of(self.full)

    def points_of(self, mask: int) -> list[Ideal]:
        return [self.points[i] for i in iter_bits(mask)]

    def point_set(self, mask: int) -> PointSet:
        return PointSet(self, mask)

    def restrict(self, subset: PointSet | int, label: str | None = None) -> SubSpace:
        mask = subset.members if isinstance(subset, PointSet) else subset
        return SubSpace(self.ring, self.points_of(mask), label or f"{self.label}|{bits(mask)}")

    def subset_index(self, config: Config | None = None) -> SubsetIndex:
        if self._subset_index is None:
            from hyideals.calculus import SubsetIndex

            self._subset_index = SubsetIndex.build(self, config or Config())
        return self._subset_index


@dataclass(frozen=True)
class PointSet:
    """An arbitrary subset of the points of a subspace."""

    subspace: SubSpace
    members: int

    def __len__(self) -> int:
        return self.members.bit_count()

    def __contains__(self, point: Ideal) -> bool:
        return any(point == p for p in self.points())

    @property
    def is_empty(self) -> bool:
        return self.members == 0

    def points(self) -> list[Ideal]:
        return self.subspace.points_of(self.members)

    def indices(self) -> list[int]:
        return bits(self.members)


@dataclass(frozen=True)
class ClosedSet(PointSet):
    """A point set of the form h_Y(I); only hull and closure construct these."""


def hull(subspace: SubSpace, s: Ideal | Iterable[int]) -> ClosedSet:
    if isinstance(s, Ideal):
        if s.ring is not subspace.ring:
            raise RingMismatch("Ideal and subspace belong to different rings")
        return ClosedSet(subspace, subspace.ideal_hull(s))
    return ClosedSet(subspace, subspace.set_hull(s))


def co_hull(subspace: SubSpace, s: Ideal | Iterable[int]) -> PointSet:
    """The basic open set Y minus h_Y(S)."""
    return PointSet(subspace, subspace.full & ~hull(subspace, s).members)


def kernel(s: PointSet) -> Ideal:
    return s.subspace.kernel_of(s.members)


def closure(subspace: SubSpace, s: PointSet) -> ClosedSet:
    if s.subspace is not subspace and not is_subset_of(s, subspace):
        raise ValidationError("Point set is not contained in the subspace")
    return hull(subspace, kernel(s))


def is_subset_of(s: PointSet, subspace: SubSpace) -> bool:
    masks = subspace.point_masks()
    return all(p.members in masks for p in s.points())


def is_y_hilbert(ideal: Ideal, subspace: SubSpace) -> bool:
    return subspace.kh(ideal) == ideal


def is_compact(subspace: SubSpace) -> tuple[bool, str]:
    """Every subspace here is finite, hence compact."""
    return True, "finite-space"


def subbasic_cover_check(subspace: SubSpace) -> bool:
    """An ideal with empty hull has a finite subset with empty hull (N <= 16)."""
    ring = subspace.ring
    if ring.size > COVER_CHECK_MAX:
        raise CapExceeded(f"Cover check is limited to rings of {COVER_CHECK_MAX} elements")
    for ideal in all_ideals(ring):
        if subspace.ideal_hull(ideal) == 0 and subspace.set_hull(ideal) != 0:
            return False
    return True


def _instance(subspace: SubSpace) -> Instance:
    return Instance(ring=subspace.ring.name, Y=subspace.label)


def verify_compactness_equivalents(subspace: SubSpace) -> CheckReport:
    """Evaluate the four compactness conditions and compare them with is_compact."""
    from hyideals.calculus import is_fixed, is_hy_ideal, is_strong_hy_ideal, maxl_pshy

    ring = subspace.ring
    lattice = all_ideals(ring)
    union = 0
    for p in subspace.points:
        union |= p.members
    compact, _ = is_compact(subspace)
    witness = None
    examined = 0
    for ideal in lattice:
        examined += 1
        conditions = {
            "proper_hy_fixed": not (
                ideal.is_proper and is_hy_ideal(ideal, subspace) and not is_fixed(ideal, subspace)
            ),
            "proper_strong_fixed": not (
                ideal.is_proper
                and is_strong_hy_ideal(ideal, subspace)
                and not is_fixed(ideal, subspace)
            ),
            "inside_union_fixed": not (
                is_subset(ideal.members, union) and not is_fixed(ideal, subspace)
            ),
        }
        for name, holds in conditions.items():
            if holds != compact:
                witness = {"condition": name, "ideal": ideal.to_json()}
                break
        if witness:
            break
    if witness is None:
        outside = [m for m in maxl_pshy(ring, subspace) if m.members not in subspace.point_masks()]
        if (not outside) != compact:
            witness = {"condition": "maximal_strong_in_Y", "ideal": outside[0].to_json()}
    if witness:
        verdict = Verdict.FAIL
    else:
        verdict = Verdict.DEGENERATE if subspace.is_empty else Verdict.PASS
    return CheckReport(
        id="fixed.compactness-equivalents",
        instance=_instance(subspace),
        verdict=verdict,
        witness=witness,
        examined=examined,
    )


def compactification(subspace: SubSpace) -> SubSpace:
    """Z = maxl(PSH_Y) together with Y; checks primality, density and compactness."""
    from hyideals.calculus import maxl_pshy

    extra = maxl_pshy(subspace.ring, subspace)
    for m in extra:
        if not is_prime(m):
            raise NonPrimeMaximalStrongIdeal(
                f"Maximal proper strong ideal {m.label()} over {subspace.label} is not prime"
            )
    known = subspace.point_masks()
    points = list(subspace.points) + [m for m in extra if m.members not in known]
    z = SubSpace(subspace.ring, points, f"compactification({subspace.label})")
    dense = closure(z, PointSet(z, mask_of(range(len(subspace))))).members == z.full
    if not dense:
        raise ConsistencyError(f"{subspace.label} is not dense in its compactification")
    if not is_compact(z)[0]:
        raise ConsistencyError("Compactification is not compact")
    return z


# -- Selectors --


def select_subspace(ring: FiniteRing, selector: str, config: Config | None = None) -> SubSpace:
    """Resolve one of `spec`, `max`, `min`, `indices:[...]`."""
    validate_selector(selector)
    primes = spec(ring, config)
    if selector == "spec":
        return SubSpace(ring, primes, "spec")
    if selector == "max":
        return SubSpace(ring, max_ideals(ring), "max")
    if selector == "min":
        return SubSpace(ring, min_primes(ring), "min")
    indices = parse_indices_selector(selector)
    if indices is None:
        raise ValidationError(f"Selector {selector!r} names several subspaces")
    if any(i >= len(primes) for i in indices):
        raise ValidationError(
            f"Selector {selector!r} is out of range: {ring.name} has {len(primes)} primes"
        )
    if len(set(indices)) != len(indices):
        raise ValidationError(f"Selector {selector!r} repeats an index")
    return SubSpace(ring, [primes[i] for i in indices], _indices_label(indices))


def _indices_label(indices: Iterable[int]) -> str:
    return "indices:[" + ",".join(str(i) for i in indices) + "]"


def enumerate_subspaces(
    ring: FiniteRing, selectors: Iterable[str], config: Config | None = None
) -> list[SubSpace]:
    """Expand selectors into distinct subspaces; `all-subsets` is gated by spectrum size."""
    config = config or Config()
    primes = spec(ring, config)
    out: list[SubSpace] = []
    seen: set[frozenset[int]] = set()

    def keep(subspace: SubSpace) -> None:
        key = subspace.point_masks()
        if key not in seen:
            seen.add(key)
            out.append(subspace)

    for selector in selectors:
        if selector != "all-subsets":
            keep(select_subspace(ring, selector, config))
            continue
        for named in ("spec", "max", "min"):
            keep(select_subspace(ring, named, config))
        k = len(primes)
        if k <= config.all_subsets_max_spec:
            masks: Iterable[int] = range(1 << k)
        else:
            logger.warning(
                "%s has %d primes; sampling %d subspaces", ring.name, k, config.sampled_subspaces
            )
            rng = random.Random(f"subspaces:{config.seed}:{ring.name}")
            masks = [rng.getrandbits(k) for _ in range(config.sampled_subspaces)]
        for mask in masks:
            indices = bits(mask)
            keep(SubSpace(ring, [primes[i] for i in indices], _indices_label(indices)))
    return out


def maximal_points(subspace: SubSpace) -> list[Ideal]:
    return maxl(subspace.points)
