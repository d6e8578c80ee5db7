"""H_Y-ideals and strong H_Y-ideals: condition profiles, closures, filters, fixed and free ideals.

Quantifiers over arbitrary subsets S of R are answered through a SubsetIndex:
every quantified S is grouped by its hull h_Y(S), and the union of each group
is stored. "S is inside I for every S with hull v" then becomes "the union for
v is inside I". The index enumerates all 2^N subsets when N is small enough,
otherwise it groups ideals, which is exact because h_Y(S) = h_Y(<S>) and
S lies in I iff <S> does.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Literal

from hyideals.bitset import bits, is_subset, iter_bits
from hyideals.config import Config
from hyideals.ideals import Ideal, all_ideals, maxl, sum_masks
from hyideals.report import CheckReport, Instance, Verdict
from hyideals.ring import FiniteRing, subring
from hyideals.spectrum import is_prime
from hyideals.topology import PointSet, SubSpace
from hyideals.validation import CapExceeded, ConsistencyError, SNotSubsetY

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubsetIndex:
    """Hull value -> union of every quantified set S with that hull."""

    source: str  # "subsets" or "ideals"
    unions: dict[int, int]

    @classmethod
    def build(cls, subspace: SubSpace, config: Config) -> SubsetIndex:
        ring = subspace.ring
        unions: dict[int, int] = {}
        if ring.size <= config.subset_oracle_max:
            hulls = [subspace.full] * (1 << ring.size)
            unions[subspace.full] = 0
            for s in range(1, 1 << ring.size):
                low = s & -s
                h = hulls[s ^ low] & subspace.element_hull(low.bit_length() - 1)
                hulls[s] = h
                unions[h] = unions.get(h, 0) | s
            return cls("subsets", unions)
        for ideal in all_ideals(ring, config):
            h = subspace.ideal_hull(ideal)
            unions[h] = unions.get(h, 0) | ideal.members
        return cls("ideals", unions)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.unions.items()))


@dataclass
class ConditionProfile:
    """Per-condition verdicts of one equivalence list, with the first failure witness."""

    family: str
    verdicts: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, dict[str, Any]] = field(default_factory=dict)

    @property
    def uniform(self) -> bool:
        return len(set(self.verdicts.values())) <= 1

    def record(self, name: str, failures: Iterator[dict[str, Any]]) -> None:
        first = next(failures, None)
        self.verdicts[name] = first is None
        if first is not None:
            self.witnesses[name] = first

    def to_dict(self) -> dict[str, Any]:
        return {"family": self.family, "verdicts": self.verdicts, "witnesses": self.witnesses}


# -- Finite subsets of an ideal --


def finite_hulls(ideal: Ideal, subspace: SubSpace) -> frozenset[int]:
    """{h_Y(F) : F a finite subset of I}: the AND-closure of element hulls, plus Y."""
    found = {subspace.full}
    for a in ideal:
        h = subspace.element_hull(a)
        found |= {v & h for v in found}
    return frozenset(found)


def subideal_hulls(ideal: Ideal, subspace: SubSpace) -> frozenset[int]:
    """{h_Y(J') : J' a subideal of I}, the lattice route to the same family."""
    return frozenset(subspace.ideal_hull(j) for j in all_ideals(ideal.ring).below(ideal))


# -- Predicates --


def is_hy_ideal(ideal: Ideal, subspace: SubSpace) -> bool:
    key = ("hy", ideal.members)
    cached = subspace._memo.get(key)
    if cached is None:
        cached = all(subspace.kh_element(a) <= ideal for a in ideal)
        subspace._memo[key] = cached
    return cached  # type: ignore[return-value]


def is_strong_hy_ideal(ideal: Ideal, subspace: SubSpace) -> bool:
    """kh_Y(F) inside I for every finite F in I; in a finite ring F = I is the worst case."""
    return subspace.kh(ideal) <= ideal


def strong_hy_oracle(ideal: Ideal, subspace: SubSpace, config: Config | None = None) -> bool:
    """All-finite-subsets evaluation of the strong condition."""
    config = config or Config()
    if ideal.ring.size > config.strong_oracle_max:
        raise CapExceeded(f"Strong oracle is limited to {config.strong_oracle_max} elements")
    elements = ideal.elements()
    for choice in range(1 << len(elements)):
        f = [elements[i] for i in iter_bits(choice)]
        if not subspace.kernel_of(subspace.set_hull(f)) <= ideal:
            return False
    return True


def hy_condition_profile(
    ideal: Ideal, subspace: SubSpace, config: Config | None = None
) -> ConditionProfile:
    y = subspace
    index = y.subset_index(config)
    inside = ideal.members
    ring = ideal.ring
    members = ideal.elements()
    eh = y.element_hull
    khm = [y.kh_element(b).members for b in ring.elements]
    profile = ConditionProfile(f"hy[{index.source}]")

    def sets_below(pred: Callable[[int, int], bool]) -> Iterator[dict[str, Any]]:
        for a in members:
            for v, union in index.items():
                if pred(a, v) and not is_subset(union, inside):
                    yield {"a": a, "hull": bits(v), "outside": bits(union & ~inside)[0]}

    def elements_below(pred: Callable[[int, int], bool]) -> Iterator[dict[str, Any]]:
        for a in members:
            for b in ring.elements:
                if pred(a, b) and not (inside >> b) & 1:
                    yield {"a": a, "b": b}

    def kernel_of(v: int) -> int:
        return y.kernel_of(v).members

    profile.record("hull_below_set", sets_below(lambda a, v: is_subset(eh(a), v)))
    profile.record("hull_equal_set", sets_below(lambda a, v: eh(a) == v))
    profile.record("hull_equal_element", elements_below(lambda a, b: eh(a) == eh(b)))
    profile.record("hull_below_element", elements_below(lambda a, b: is_subset(eh(a), eh(b))))
    profile.record(
        "kernel_hull_contained",
        ({"a": a} for a in members if not is_subset(khm[a], inside)),
    )
    profile.record("kh_set_below", sets_below(lambda a, v: is_subset(kernel_of(v), khm[a])))
    profile.record("kh_set_equal", sets_below(lambda a, v: kernel_of(v) == khm[a]))
    profile.record("kh_element_equal", elements_below(lambda a, b: khm[b] == khm[a]))
    profile.record("kh_element_below", elements_below(lambda a, b: is_subset(khm[b], khm[a])))
    return profile


def strong_condition_profile(
    ideal: Ideal, subspace: SubSpace, config: Config | None = None
) -> ConditionProfile:
    y = subspace
    index = y.subset_index(config)
    filt = HYFilter(y, ideal, "subsets" if index.source == "subsets" else "ideals")
    finite = filt.members()
    finite_sorted = sorted(finite)
    inside = ideal.members
    ring = ideal.ring
    eh = y.element_hull
    khm = [y.kh_element(b).members for b in ring.elements]
    profile = ConditionProfile(f"strong[{index.source}]")

    def kernel_of(v: int) -> int:
        return y.kernel_of(v).members

    def sets_against(pred: Callable[[int, int], bool]) -> Iterator[dict[str, Any]]:
        for v in finite_sorted:
            for w, union in index.items():
                if pred(v, w) and not is_subset(union, inside):
                    yield {"finite_hull": bits(v), "hull": bits(w)}

    def elements_against(pred: Callable[[int, int], bool]) -> Iterator[dict[str, Any]]:
        for v in finite_sorted:
            for b in ring.elements:
                if pred(v, b) and not (inside >> b) & 1:
                    yield {"finite_hull": bits(v), "b": b}

    profile.record("finite_hull_equal_set", sets_against(lambda v, w: v == w))
    profile.record(
        "finite_hull_equal_finite",
        (
            {"finite_hull": bits(v)}
            for v in finite_sorted
            if v in index.unions and not is_subset(index.unions[v], inside)
        ),
    )
    profile.record("finite_hull_below_finite", sets_against(lambda v, w: is_subset(v, w)))
    profile.record(
        "filter_member_element",
        ({"b": b} for b in ring.elements if eh(b) in filt and not (inside >> b) & 1),
    )
    profile.record(
        "filter_member_finite",
        (
            {"hull": bits(w)}
            for w, union in index.items()
            if w in filt and not is_subset(union, inside)
        ),
    )
    profile.record("finite_hull_equal_element", elements_against(lambda v, b: eh(b) == v))
    profile.record("finite_hull_below_element", elements_against(lambda v, b: is_subset(v, eh(b))))
    profile.record(
        "finite_kh_contained",
        ({"finite_hull": bits(v)} for v in finite_sorted if not is_subset(kernel_of(v), inside)),
    )
    profile.record("finite_kh_equal_element", elements_against(lambda v, b: khm[b] == kernel_of(v)))
    profile.record(
        "finite_kh_below_element", elements_against(lambda v, b: is_subset(khm[b], kernel_of(v)))
    )
    profile.record("finite_kh_equal_set", sets_against(lambda v, w: kernel_of(w) == kernel_of(v)))
    profile.record(
        "finite_kh_below_set", sets_against(lambda v, w: is_subset(kernel_of(w), kernel_of(v)))
    )
    return profile


# -- Closures --


def _least_above(ideal: Ideal, pred: Callable[[Ideal], bool]) -> Ideal:
    lattice = all_ideals(ideal.ring)
    candidates = [h for h in lattice.above(ideal) if pred(h)]
    meet = ideal.ring.full_mask
    for h in candidates:
        meet &= h.members
    least = lattice.get(meet)
    if least is None or least not in candidates:
        raise ConsistencyError(f"No least ideal above {ideal.label()} with the property")
    return least


def hy_closure(ideal: Ideal, subspace: SubSpace) -> Ideal:
    """I_H: least fixpoint of J -> <union of kh_Y(a) for a in J>, checked against the lattice."""
    key = ("closure", ideal.members)
    cached = subspace._memo.get(key)
    if cached is not None:
        return cached  # type: ignore[return-value]
    ring = ideal.ring
    mask = ideal.members
    while True:
        grown = mask
        for a in iter_bits(mask):
            grown = sum_masks(ring, grown, subspace.kh_element(a).members)
        if grown == mask:
            break
        mask = grown
    result = all_ideals(ring).find(mask)
    oracle = _least_above(ideal, lambda h: is_hy_ideal(h, subspace))
    if oracle != result:
        raise ConsistencyError(
            f"Closure of {ideal.label()}: fixpoint {result.label()} != least {oracle.label()}"
        )
    subspace._memo[key] = result
    return result


def strong_hy_closure(ideal: Ideal, subspace: SubSpace) -> Ideal:
    """I_SH = kh_Y(I), checked against the lattice."""
    result = subspace.kh(ideal)
    oracle = _least_above(ideal, lambda h: is_strong_hy_ideal(h, subspace))
    if oracle != result:
        raise ConsistencyError(
            f"Strong closure of {ideal.label()}: {result.label()} != least {oracle.label()}"
        )
    return result


# -- Filters and fixed ideals --


@dataclass(frozen=True)
class HYFilter:
    """H_Y(I): the closed sets h_Y(F) for finite F inside I.

    The "ideals" route reads them off the subideals of I; "subsets" folds element hulls.
    """

    subspace: SubSpace
    ideal: Ideal
    route: Literal["ideals", "subsets"] = "ideals"

    @cached_property
    def _hulls(self) -> frozenset[int]:
        if self.route == "subsets":
            return finite_hulls(self.ideal, self.subspace)
        return subideal_hulls(self.ideal, self.subspace)

    def members(self) -> frozenset[int]:
        return self._hulls

    def __contains__(self, closed: PointSet | int) -> bool:
        mask = closed.members if isinstance(closed, PointSet) else closed
        return mask in self.members()

    def intersection(self) -> PointSet:
        meet = self.subspace.full
        for m in self.members():
            meet &= m
        return PointSet(self.subspace, meet)


def filter_intersection(ideal: Ideal, subspace: SubSpace) -> PointSet:
    meet = HYFilter(subspace, ideal).intersection()
    if meet.members != subspace.ideal_hull(ideal):
        raise ConsistencyError(f"Filter of {ideal.label()} does not meet in its hull")
    return meet


def is_fixed(ideal: Ideal, subspace: SubSpace) -> bool:
    return subspace.ideal_hull(ideal) != 0


def _mask_in(subset: PointSet, subspace: SubSpace) -> int:
    if subset.subspace is subspace:
        return subset.members
    position = {p.members: i for i, p in enumerate(subspace.points)}
    mask = 0
    for p in subset.points():
        if p.members not in position:
            raise SNotSubsetY(f"{p.label()} is not a point of {subspace.label}")
        mask |= 1 << position[p.members]
    return mask


def is_fixed_wrt(ideal: Ideal, subset: PointSet, subspace: SubSpace) -> bool:
    """Fixed with respect to S: the filter's intersection meets S."""
    s = _mask_in(subset, subspace)
    result = filter_intersection(ideal, subspace).members & s != 0
    if result != is_fixed(ideal, subspace.restrict(s)):
        raise ConsistencyError(f"Fixedness of {ideal.label()} w.r.t. {bits(s)} disagrees")
    return result


def hy_ideals(ring: FiniteRing, subspace: SubSpace) -> list[Ideal]:
    return [i for i in all_ideals(ring) if is_hy_ideal(i, subspace)]


def strong_hy_ideals(ring: FiniteRing, subspace: SubSpace) -> list[Ideal]:
    return [i for i in all_ideals(ring) if is_strong_hy_ideal(i, subspace)]


def maximal_fixed(subspace: SubSpace) -> list[Ideal]:
    fixed = [i for i in hy_ideals(subspace.ring, subspace) if is_fixed(i, subspace)]
    found = maxl(fixed)
    if {i.members for i in found} != {p.members for p in maxl(subspace.points)}:
        raise ConsistencyError(f"Maximal fixed ideals of {subspace.label} are not maxl(Y)")
    return found


def maximal_fixed_wrt(subset: PointSet, subspace: SubSpace) -> list[Ideal]:
    s = _mask_in(subset, subspace)
    fixed = [
        i
        for i in hy_ideals(subspace.ring, subspace)
        if filter_intersection(i, subspace).members & s
    ]
    found = maxl(fixed)
    expected = {p.members for p in maxl(subspace.points)} & {
        p.members for p in subspace.points_of(s)
    }
    if {i.members for i in found} != expected:
        raise ConsistencyError(f"Maximal ideals fixed w.r.t. {bits(s)} are not maxl(Y) ∩ S")
    return found


def pshy(ring: FiniteRing, subspace: SubSpace) -> list[Ideal]:
    """Proper strong H_Y-ideals."""
    return [i for i in strong_hy_ideals(ring, subspace) if i.is_proper]


def maxl_pshy(ring: FiniteRing, subspace: SubSpace) -> list[Ideal]:
    return maxl(pshy(ring, subspace))


def hy_inverse_image(ideal: Ideal, subspace: SubSpace) -> Ideal:
    """{a : h_Y(a) in H_Y(I)}; must be an ideal containing I."""
    members = HYFilter(subspace, ideal).members()
    ring = ideal.ring
    mask = 0
    for a in ring.elements:
        if subspace.element_hull(a) in members:
            mask |= 1 << a
    image = all_ideals(ring).find(mask)
    if not ideal <= image:
        raise ConsistencyError(f"Inverse image of {ideal.label()} does not contain it")
    return image


def separation_instance(ideal: Ideal, subspace: SubSpace) -> bool:
    """An H_Y-ideal that is not strong."""
    return is_hy_ideal(ideal, subspace) and not is_strong_hy_ideal(ideal, subspace)


# -- Subrings --


def subring_restriction_check(
    ring: FiniteRing, subring_elements: list[int], subspace: SubSpace, ideal: Ideal
) -> CheckReport:
    """Fixed in R over Y implies I ∩ R' fixed in R' over the contracted primes."""
    sub, embed = subring(ring, subring_elements)
    lattice = all_ideals(sub)

    def contract(i: Ideal) -> int:
        mask = 0
        for j, a in enumerate(embed):
            if a in i:
                mask |= 1 << j
        return mask

    contracted: dict[int, Ideal] = {}
    for p in subspace.points:
        q = lattice.find(contract(p))
        if not is_prime(q):
            raise ConsistencyError(f"Contraction of {p.label()} to {sub.name} is not prime")
        contracted.setdefault(q.members, q)
    sub_space = SubSpace(sub, contracted.values(), f"{subspace.label}∩R'")
    restricted = lattice.find(contract(ideal))
    holds = not is_fixed(ideal, subspace) or is_fixed(restricted, sub_space)
    if holds:
        verdict = Verdict.DEGENERATE if subspace.is_empty else Verdict.PASS
    else:
        verdict = Verdict.FAIL
    return CheckReport(
        id="fixed.subring-restriction",
        instance=Instance(ring=ring.name, Y=subspace.label),
        verdict=verdict,
        witness=None if holds else {"subring": list(embed), "ideal": ideal.to_json()},
        examined=1,
    )
