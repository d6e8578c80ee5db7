"""Checks on H_Y-factors: maximal, minimal and greatest factors."""

from __future__ import annotations

from typing import TYPE_CHECKING

from hyideals.bitset import bits
from hyideals.checks.common import VARIANTS, meet, shown
from hyideals.ideals import ideal_sum, maxl, minl
from hyideals.relative import (
    factor_k_minprimes,
    factors,
    greatest_factor,
    is_relative_hy,
    is_relative_strong_hy,
    maximum_of,
    minimal_factor_check,
    predicates,
)
from hyideals.report import Verdict
from hyideals.ring import is_arithmetical
from hyideals.spectrum import spec
from hyideals.validation import ConsistencyError

if TYPE_CHECKING:
    from hyideals.ideals import Ideal
    from hyideals.verifier import CheckContext, Registry, Tally


def _masks(ideals: list[Ideal]) -> list[list[int]]:
    return sorted(bits(i.members) for i in ideals)


def _prime_tops(ctx: CheckContext, j: Ideal, strong: bool) -> list[Ideal]:
    """maxl of the prime H_Y-ideals not containing J."""
    _, pred, _ = predicates(strong)
    return maxl(p for p in spec(ctx.ring, ctx.config) if pred(p, ctx.y) and not j <= p)


def _greatest_exists(ctx: CheckContext, tally: Tally) -> None:
    for strong in VARIANTS:
        relative = is_relative_strong_hy if strong else is_relative_hy
        for i in ctx.lattice:
            if relative(i, ctx.y):
                top = maximum_of(factors(i, ctx.y, strong))
                tally.expect(top is not None, **shown(strong, I=i))


def register_checks(registry: Registry) -> None:
    @registry.check(
        "factor.maximal-are-primes",
        "The maximal ideals with J as a factor are the maximal prime H_Y-ideals missing J",
    )
    def maximal_are_primes(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for j in ctx.lattice:
                bases = [i for i in ctx.lattice if not j <= i and hyj(i, j, ctx.y)]
                found = _masks(maxl(bases))
                expected = _masks(_prime_tops(ctx, j, strong))
                tally.expect(
                    found == expected, found=found, expected=expected, **shown(strong, J=j)
                )

    @registry.check(
        "factor.maximal-proper-subideals",
        "Maximal H_{YJ}-ideals strictly inside J have the form P ∩ J",
    )
    def maximal_proper_subideals(ctx: CheckContext, tally: Tally) -> None:
        tally.note("the form P ∩ I in the statement is read as P ∩ J")
        lattice = ctx.lattice
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for j in lattice:
                inside = [i for i in lattice.below(j) if i != j and hyj(i, j, ctx.y)]
                forms = {meet(lattice, p, j).members for p in _prime_tops(ctx, j, strong)}
                for i in maxl(inside):
                    tally.expect(i.members in forms, **shown(strong, I=i, J=j))

    @registry.check(
        "factor.maximal-contains-base",
        "An ideal with a factor has a maximal factor containing it",
        premise="I has a factor",
    )
    def maximal_contains_base(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            for i in ctx.lattice:
                family = factors(i, ctx.y, strong)
                if family:
                    tally.expect(any(i <= m for m in maxl(family)), **shown(strong, I=i))

    @registry.check(
        "factor.minimal-plus-base",
        "I + J is a minimal factor containing I for every minimal factor J of I",
        premise="J a minimal factor of I",
    )
    def minimal_plus_base(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            for i in ctx.lattice:
                family = factors(i, ctx.y, strong)
                lows = {k.members for k in minl(k for k in family if i <= k)}
                for j in minl(family):
                    total = ideal_sum(i, j)
                    tally.expect(total.members in lows, **shown(strong, I=i, J=j, sum=total))

    @registry.check(
        "factor.greatest-formula",
        "The greatest factor, when it exists, is given by the kh_Y(a) ∩ <x> formula",
    )
    def greatest_formula(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        for strong in VARIANTS:
            for i in ctx.lattice:
                try:
                    found = greatest_factor(i, y, strong)
                except ConsistencyError as e:
                    tally.fail(error=str(e), **shown(strong, I=i))
                    continue
                relative = bool(factors(i, y, strong))
                tally.expect(
                    found.trivial != relative and (found.has_maximum or not relative),
                    greatest=found.ideal.to_json(),
                    **shown(strong, I=i),
                )
                if not strong and found.swapped != found.ideal:
                    tally.note(
                        f"statement formula gives {found.swapped.label()} but the proof formula "
                        f"gives {found.ideal.label()} for I={i.label()}"
                    )

    @registry.check(
        "factor.minimal-prime-meet",
        "With K the meet of the non-H_Y primes of Min(I): I_H ∩ K lies inside √I",
    )
    def minimal_prime_meet(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            for i in ctx.lattice:
                try:
                    factor_k_minprimes(i, ctx.y, strong)
                except ConsistencyError as e:
                    tally.fail(error=str(e), **shown(strong, I=i))
                else:
                    tally.expect(True)

    @registry.check(
        "factor.greatest-exists",
        "A relative H_Y-ideal has a greatest factor",
        premise="I relative",
    )
    def greatest_exists(ctx: CheckContext, tally: Tally) -> None:
        _greatest_exists(ctx, tally)

    @registry.check(
        "factor.arithmetical-greatest",
        "Over an arithmetical ring every relative H_Y-ideal has a greatest factor",
        premise="R arithmetical and I relative",
    )
    def arithmetical_greatest(ctx: CheckContext, tally: Tally) -> None:
        if is_arithmetical(ctx.ring, ctx.config):
            _greatest_exists(ctx, tally)

    @registry.check(
        "factor.minimal-characterization",
        "J is a minimal factor of I iff J = <e>, e outside √I, <e> minimal outside I",
    )
    def minimal_characterization(ctx: CheckContext, tally: Tally) -> None:
        for i, j in ctx.tuples(2):
            report = minimal_factor_check(i, j, ctx.y)
            tally.examined += report.examined
            if report.verdict is Verdict.FAIL:
                tally.fail(**(report.witness or {}))
            for text in report.notes:
                tally.note(text)
