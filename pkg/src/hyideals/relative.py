"""Relative H_Y-ideals: H_{YJ} predicates, factors, greatest and minimal factors."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any, NamedTuple

from hyideals.bitset import bits, is_subset
from hyideals.calculus import (
    ConditionProfile,
    finite_hulls,
    hy_closure,
    is_hy_ideal,
    is_strong_hy_ideal,
    strong_hy_closure,
)
from hyideals.config import Config
from hyideals.ideals import (
    Ideal,
    all_ideals,
    colon,
    colon_ideal,
    ideal_sum,
    intersect,
    intersect_all,
    is_semiprime,
    maxl,
    minl,
    radical,
)
from hyideals.report import CheckReport, Instance, Verdict
from hyideals.ring import has_root_property
from hyideals.spectrum import min_over, min_primes, spec
from hyideals.topology import SubSpace
from hyideals.validation import ConsistencyError, NotSemiprime, PremiseFailed

logger = logging.getLogger(__name__)


# -- H_{YJ} predicates --


def is_hyj(ideal: Ideal, j: Ideal, subspace: SubSpace) -> bool:
    """kh_Y(a) ∩ J inside I for every a in I."""
    outside = j.members & ~ideal.members
    return all(subspace.kh_element(a).members & outside == 0 for a in ideal)


def is_strong_hyj(ideal: Ideal, j: Ideal, subspace: SubSpace) -> bool:
    """kh_Y(F) ∩ J inside I for every finite F in I; F = I is the worst case."""
    return subspace.kh(ideal).members & j.members & ~ideal.members == 0


def strong_hyj_oracle(ideal: Ideal, j: Ideal, subspace: SubSpace) -> bool:
    """Strong H_{YJ} by definition, over every finite hull inside I."""
    outside = j.members & ~ideal.members
    return all(subspace.kernel_of(v).members & outside == 0 for v in finite_hulls(ideal, subspace))


class Predicates(NamedTuple):
    """The plain or the strong member of each predicate pair."""

    hyj: Callable[[Ideal, Ideal, SubSpace], bool]
    hy: Callable[[Ideal, SubSpace], bool]
    closure: Callable[[Ideal, SubSpace], Ideal]


def predicates(strong: bool) -> Predicates:
    """The H_{YJ} test, H_Y test and closure for the plain or strong calculus."""
    if strong:
        return Predicates(is_strong_hyj, is_strong_hy_ideal, strong_hy_closure)
    return Predicates(is_hyj, is_hy_ideal, hy_closure)


def hyj_equivalents(
    ideal: Ideal, j: Ideal, subspace: SubSpace, strong: bool = False
) -> ConditionProfile:
    """The six equivalent forms of the H_{YJ} condition, each evaluated on its own."""
    hyj, pred, close = predicates(strong)
    lattice = all_ideals(ideal.ring)
    closed = close(ideal, subspace)
    meet = ideal.members & j.members
    profile = ConditionProfile("strong-hyj" if strong else "hyj")
    witnesses = [k for k in lattice.above(ideal) if pred(k, subspace)]
    y = subspace
    profile.record("definition", iter([] if hyj(ideal, j, y) else [{}]))
    profile.record(
        "closure_meet_contained",
        iter([] if is_subset(closed.members & j.members, ideal.members) else [{}]),
    )
    profile.record(
        "closure_meet_equal",
        iter([] if closed.members & j.members == meet else [{"closure": closed.to_json()}]),
    )
    profile.record(
        "witness_equal",
        iter([] if any(k.members & j.members == meet for k in witnesses) else [{}]),
    )
    profile.record(
        "witness_contained",
        iter(
            []
            if any(is_subset(k.members & j.members, ideal.members) for k in witnesses)
            else [{}]
        ),
    )
    if strong:
        hulls = sorted(finite_hulls(ideal, y))
        failures = (
            {"finite_hull": bits(v), "b": b}
            for v in hulls
            for b in j
            if is_subset(v, y.element_hull(b)) and b not in ideal
        )
    else:
        failures = (
            {"a": a, "b": b}
            for a in ideal
            for b in j
            if is_subset(y.element_hull(a), y.element_hull(b)) and b not in ideal
        )
    profile.record("pointwise_hull", failures)
    return profile


def hyj_family(j: Ideal, subspace: SubSpace, strong: bool = False) -> list[Ideal]:
    """Every ideal I that is an H_{YJ}-ideal for the fixed J."""
    hyj = is_strong_hyj if strong else is_hyj
    return [i for i in all_ideals(j.ring) if hyj(i, j, subspace)]


# -- Relative ideals --


@dataclass(frozen=True)
class RelativeVerdict:
    relative: bool
    factor: Ideal | None = None
    witness_element: int | None = None

    def __bool__(self) -> bool:
        return self.relative


def relative_by_factor(ideal: Ideal, subspace: SubSpace, strong: bool = False) -> Ideal | None:
    """First lattice ideal J not inside I with I an H_{YJ}-ideal."""
    hyj = is_strong_hyj if strong else is_hyj
    for j in all_ideals(ideal.ring):
        if not j <= ideal and hyj(ideal, j, subspace):
            return j
    return None


def relative_by_principal(ideal: Ideal, subspace: SubSpace, strong: bool = False) -> int | None:
    """First c outside I with <c> ∩ kh_Y(a) inside I for all a in I."""
    ring = ideal.ring
    lattice = all_ideals(ring)
    if strong:
        kernels = [subspace.kh(ideal).members]
    else:
        kernels = sorted({subspace.kh_element(a).members for a in ideal})
    for c in ring.elements:
        if c in ideal:
            continue
        principal = lattice.principal(c).members
        if all(is_subset(principal & k, ideal.members) for k in kernels):
            return c
    return None


def _relative(ideal: Ideal, subspace: SubSpace, strong: bool) -> RelativeVerdict:
    factor = relative_by_factor(ideal, subspace, strong)
    element = relative_by_principal(ideal, subspace, strong)
    if (factor is None) != (element is None):
        raise ConsistencyError(f"Relative routes disagree on {ideal.label()} over {subspace.label}")
    return RelativeVerdict(factor is not None, factor, element)


def is_relative_hy(ideal: Ideal, subspace: SubSpace) -> RelativeVerdict:
    """Is I an H_{YJ}-ideal for some J not inside I?"""
    return _relative(ideal, subspace, strong=False)


def is_relative_strong_hy(ideal: Ideal, subspace: SubSpace) -> RelativeVerdict:
    """Strong counterpart of is_relative_hy."""
    return _relative(ideal, subspace, strong=True)


# -- Factors --


def factors(
    ideal: Ideal, subspace: SubSpace, strong: bool = False, include_trivial: bool = False
) -> list[Ideal]:
    """Ideals J with I an H_{YJ}-ideal; J inside I only when include_trivial is set."""
    hyj = is_strong_hyj if strong else is_hyj
    return [
        j
        for j in all_ideals(ideal.ring)
        if (include_trivial or not j <= ideal) and hyj(ideal, j, subspace)
    ]


def maximum_of(family: list[Ideal]) -> Ideal | None:
    """The member containing every other, if there is one."""
    for candidate in family:
        if all(f <= candidate for f in family):
            return candidate
    return None


@dataclass
class FactorReport:
    base: Ideal
    subspace: SubSpace
    factors: list[Ideal]
    greatest: Ideal | None
    minimal: list[Ideal]
    maximal: list[Ideal]
    strong_factors: list[Ideal]
    strong_greatest: Ideal | None
    strong_minimal: list[Ideal]

    def to_dict(self) -> dict[str, Any]:
        def names(ideals: list[Ideal]) -> list[str]:
            return [i.label() for i in ideals]

        def name(ideal: Ideal | None) -> str | None:
            return ideal.label() if ideal is not None else None

        return {
            "ideal": self.base.label(),
            "factors": names(self.factors),
            "greatest": name(self.greatest),
            "minimal": names(self.minimal),
            "maximal": names(self.maximal),
            "strong_factors": names(self.strong_factors),
            "strong_greatest": name(self.strong_greatest),
            "strong_minimal": names(self.strong_minimal),
        }


def factor_report(ideal: Ideal, subspace: SubSpace) -> FactorReport:
    """Plain and strong factors of I with their greatest, minimal and maximal members."""
    plain = factors(ideal, subspace)
    strong = factors(ideal, subspace, strong=True)
    return FactorReport(
        base=ideal,
        subspace=subspace,
        factors=plain,
        greatest=maximum_of(plain),
        minimal=minl(plain),
        maximal=maxl(plain),
        strong_factors=strong,
        strong_greatest=maximum_of(strong),
        strong_minimal=minl(strong),
    )


@dataclass(frozen=True)
class GreatestFactor:
    """Value of the greatest-factor formula, with how it relates to the factor poset."""

    ideal: Ideal
    trivial: bool
    has_maximum: bool
    # the same formula with the element and the principal ideal swapped
    swapped: Ideal = field(compare=False)


def greatest_factor(ideal: Ideal, subspace: SubSpace, strong: bool = False) -> GreatestFactor:
    """K = {x : kh_Y(a) ∩ <x> inside I for all a in I}, by exhaustive scan of x.

    The strong variant ranges over kh_Y(F) for finite F inside I.
    """
    ring = ideal.ring
    lattice = all_ideals(ring)
    if strong:
        kernels = sorted({subspace.kernel_of(v).members for v in finite_hulls(ideal, subspace)})
    else:
        kernels = sorted({subspace.kh_element(a).members for a in ideal})
    mask = 0
    for x in ring.elements:
        principal = lattice.principal(x).members
        if all(is_subset(k & principal, ideal.members) for k in kernels):
            mask |= 1 << x
    k = lattice.find(mask)
    hyj = is_strong_hyj if strong else is_hyj
    if not hyj(ideal, k, subspace):
        raise ConsistencyError(f"Greatest-factor formula for {ideal.label()} is not a factor")
    family = factors(ideal, subspace, strong)
    top = maximum_of(family)
    if top is not None and top != k:
        raise ConsistencyError(
            f"Greatest factor of {ideal.label()}: formula {k.label()} != maximum {top.label()}"
        )
    swapped = 0
    for x in ring.elements:
        kx = subspace.kh_element(x).members
        if all(is_subset(kx & lattice.principal(a).members, ideal.members) for a in ideal):
            swapped |= 1 << x
    return GreatestFactor(
        ideal=k,
        trivial=k <= ideal,
        has_maximum=top is not None,
        swapped=lattice.find(swapped),
    )


def factor_k_minprimes(ideal: Ideal, subspace: SubSpace, strong: bool = False) -> Ideal:
    """K = ∩{P in Min(I) : P not an H_Y-ideal}; checks I_H ∩ K inside sqrt(I)."""
    _, pred, close = predicates(strong)
    ring = ideal.ring
    k = intersect_all(ring, (p for p in min_over(ideal) if not pred(p, subspace)))
    closed = close(ideal, subspace)
    if not is_subset(closed.members & k.members, radical(ideal).members):
        raise ConsistencyError(f"Closure of {ideal.label()} meets K outside the radical")
    if is_semiprime(ideal) and _relative(ideal, subspace, strong):
        top = greatest_factor(ideal, subspace, strong).ideal
        if top != k:
            raise ConsistencyError(
                f"K={k.label()} differs from greatest factor {top.label()} of {ideal.label()}"
            )
    return k


# -- Report-producing checks --


def _report(
    check_id: str,
    subspace: SubSpace,
    ok: bool,
    witness: dict[str, Any] | None = None,
    notes: list[str] | None = None,
    vacuous: bool = False,
) -> CheckReport:
    if not ok:
        verdict = Verdict.FAIL
    elif vacuous:
        verdict = Verdict.VACUOUS
    elif subspace.is_empty:
        verdict = Verdict.DEGENERATE
    else:
        verdict = Verdict.PASS
    return CheckReport(
        id=check_id,
        instance=Instance(ring=subspace.ring.name, Y=subspace.label),
        verdict=verdict,
        witness=None if ok else (witness or {}),
        notes=notes or [],
        examined=0 if vacuous else 1,
    )


def _is_minimal_principal(e_ideal: Ideal, ideal: Ideal) -> bool:
    """<e> is minimal among principal ideals not inside I."""
    lattice = all_ideals(ideal.ring)
    for a in ideal.ring.elements:
        p = lattice.principal(a)
        if not p <= ideal and p < e_ideal:
            return False
    return True


def minimal_factor_check(ideal: Ideal, j: Ideal, subspace: SubSpace) -> CheckReport:
    """J is a minimal factor of I iff J = <e> with e outside sqrt(I), I an H_{Y<e>}-ideal
    and <e> minimal among principal ideals not inside I.

    The variant asking for I ∩ <K0, e> to be an H_Y-ideal is evaluated too;
    disagreements with it become notes.
    """
    ring = ideal.ring
    lattice = all_ideals(ring)
    lhs = any(j == m for m in minl(factors(ideal, subspace)))
    generator = next((e for e in j if lattice.principal(e) == j), None)
    if generator is None:
        rhs = variant = False
    else:
        shape = generator not in radical(ideal) and _is_minimal_principal(j, ideal)
        rhs = shape and is_hyj(ideal, j, subspace)
        widened = intersect(ideal, ideal_sum(subspace.kernel_all, j))
        variant = shape and is_hy_ideal(widened, subspace)
    notes = []
    if variant != lhs:
        notes.append(
            f"I={ideal.label()}, J={j.label()}: minimal factor is {lhs} but "
            f"'I ∩ <K0, e> is H_Y' gives {variant}"
        )
    return _report(
        "factor.minimal-characterization",
        subspace,
        lhs == rhs,
        {"ideal": ideal.to_json(), "factor": j.to_json(), "minimal": lhs, "criterion": rhs},
        notes,
    )


def comparison_check(x: SubSpace, y: SubSpace, j: Ideal) -> CheckReport:
    """Every H_{XJ}-ideal is H_{YJ} iff every prime H_X-ideal not containing J is H_Y."""
    if x.ring is not y.ring:
        raise ConsistencyError("Subspaces must belong to the same ring")
    ring = x.ring
    lattice = all_ideals(ring)
    sides = {}
    for strong in (False, True):
        hyj, pred, _ = predicates(strong)
        lhs = all(hyj(i, j, y) for i in lattice if hyj(i, j, x))
        rhs = all(pred(p, y) for p in spec(ring) if pred(p, x) and not j <= p)
        sides["strong" if strong else "plain"] = (lhs, rhs)
    ok = all(lhs == rhs for lhs, rhs in sides.values())
    report = _report(
        "hyj.subspace-comparison",
        y,
        ok,
        {"X": x.label, "J": j.to_json(), "sides": {k: list(v) for k, v in sides.items()}},
    )
    report.instance.Y = f"{x.label}->{y.label}"
    return report


def semiprime_representation_check(
    ideal: Ideal, subspace: SubSpace, config: Config | None = None
) -> CheckReport:
    """I relative iff every family of primes meeting in I contains an H_Y-ideal."""
    config = config or Config()
    if not is_semiprime(ideal):
        raise NotSemiprime(f"{ideal.label()} is not semi-prime")
    primes = spec(ideal.ring)
    if len(primes) > config.all_subsets_max_spec:
        return CheckReport(
            id="relative.semiprime-representation",
            instance=Instance(ring=ideal.ring.name, Y=subspace.label),
            verdict=Verdict.SKIPPED,
            notes=[f"{len(primes)} primes exceed all_subsets_max_spec"],
        )
    representations = [
        family
        for r in range(len(primes) + 1)
        for family in itertools.combinations(primes, r)
        if intersect_all(ideal.ring, family) == ideal
    ]
    witness = None
    for strong in (False, True):
        _, pred, _ = predicates(strong)
        lhs = bool(_relative(ideal, subspace, strong))
        rhs = all(any(pred(p, subspace) for p in family) for family in representations)
        if lhs != rhs:
            witness = {"ideal": ideal.to_json(), "strong": strong, "relative": lhs}
            break
    return _report("relative.semiprime-representation", subspace, witness is None, witness)


def relative_via_colon(ideal: Ideal, subspace: SubSpace) -> CheckReport:
    """K0 inside I and (K0:I) not inside I imply I is relative strong."""
    k0 = subspace.kernel_all
    premise = k0 <= ideal and not colon_ideal(k0, ideal) <= ideal
    if not premise:
        return _report(
            "relative.via-colon",
            subspace,
            True,
            notes=["premise: K0 inside I and (K0:I) not inside I"],
            vacuous=True,
        )
    ok = bool(is_relative_strong_hy(ideal, subspace))
    return _report("relative.via-colon", subspace, ok, {"ideal": ideal.to_json()})


def principal_relative_check(a: int, subspace: SubSpace) -> CheckReport:
    """With the root property and K0 inside <a>: <a> relative strong iff (K0:a) not inside <a>."""
    ring = subspace.ring
    if not has_root_property(ring):
        raise PremiseFailed(f"{ring.name} lacks the root property")
    principal = all_ideals(ring).principal(a)
    k0 = subspace.kernel_all
    if not k0 <= principal:
        raise PremiseFailed(f"K0 is not inside <{ring.label(a)}>")
    lhs = bool(is_relative_strong_hy(principal, subspace))
    rhs = not colon(k0, a) <= principal
    return _report(
        "relative.principal-root",
        subspace,
        lhs == rhs,
        {"a": a, "relative_strong": lhs, "colon_outside": rhs},
    )


def prime_transfer_check(ideal: Ideal, j: Ideal, subspace: SubSpace) -> CheckReport:
    """I an H_{YJ}-ideal makes every prime minimal over I an H_{YJ}-ideal.

    The reading over minimal primes of the whole ring is recorded as a note.
    """
    notes: list[str] = []
    witness = None
    examined = 0
    for strong in (False, True):
        hyj = is_strong_hyj if strong else is_hyj
        if not hyj(ideal, j, subspace):
            continue
        examined += 1
        bad = [p for p in min_over(ideal) if not hyj(p, j, subspace)]
        if bad and witness is None:
            witness = {"ideal": ideal.to_json(), "J": j.to_json(), "prime": bad[0].to_json()}
        ring_bad = [p for p in min_primes(ideal.ring) if not hyj(p, j, subspace)]
        if ring_bad:
            kind = "strong " if strong else ""
            notes.append(
                f"minimal prime {ring_bad[0].label()} of the ring is not a {kind}H_YJ-ideal "
                f"for I={ideal.label()}, J={j.label()}"
            )
    report = _report(
        "hyj.minimal-prime-transfer",
        subspace,
        witness is None,
        witness,
        notes,
        vacuous=examined == 0,
    )
    report.examined = examined
    return report
