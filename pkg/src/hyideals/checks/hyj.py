"""Checks on H_{YJ}-ideals: the basic ladder, primes, equivalent forms and closure laws."""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING

from hyideals.checks.common import VARIANTS, meet, shown
from hyideals.ideals import Ideal, ideal_sum, product, radical
from hyideals.relative import (
    comparison_check,
    hyj_equivalents,
    hyj_family,
    is_hyj,
    is_strong_hyj,
    predicates,
    prime_transfer_check,
)
from hyideals.report import Verdict
from hyideals.spectrum import spec

if TYPE_CHECKING:
    from hyideals.verifier import CheckContext, Registry, Tally


def register_checks(registry: Registry) -> None:
    _register_basics(registry)
    _register_algebra(registry)
    _register_closure_laws(registry)
    _register_primes(registry)


def _register_basics(registry: Registry) -> None:
    @registry.check("hyj.strong-implies-plain", "Strong H_{YJ}-ideals are H_{YJ}-ideals")
    def strong_implies_plain(ctx: CheckContext, tally: Tally) -> None:
        for i, j in ctx.tuples(2):
            if is_strong_hyj(i, j, ctx.y):
                tally.expect(is_hyj(i, j, ctx.y), **shown(I=i, J=j))

    @registry.check("hyj.self-factor", "Every ideal I is a strong H_{YI}-ideal")
    def self_factor(ctx: CheckContext, tally: Tally) -> None:
        for i in ctx.lattice:
            tally.expect(is_strong_hyj(i, i, ctx.y), **shown(I=i))

    @registry.check(
        "hyj.hy-is-hyj",
        "An H_Y-ideal is an H_{YJ}-ideal for every J",
        premise="an H_Y-ideal",
    )
    def hy_is_hyj(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            hyj, pred, _ = predicates(strong)
            for i in ctx.lattice:
                if not pred(i, ctx.y):
                    continue
                for j in ctx.lattice:
                    tally.expect(hyj(i, j, ctx.y), **shown(strong, I=i, J=j))

    @registry.check(
        "hyj.subideal-of-hy",
        "H_{YJ}-subideals of an H_Y-ideal J are H_Y-ideals",
        premise="I inside an H_Y-ideal J with I an H_{YJ}-ideal",
    )
    def subideal_of_hy(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            hyj, pred, _ = predicates(strong)
            for i, j in ctx.tuples(2):
                if i <= j and pred(j, ctx.y) and hyj(i, j, ctx.y):
                    tally.expect(pred(i, ctx.y), **shown(strong, I=i, J=j))

    @registry.check(
        "hyj.equivalents",
        "The six forms of the H_{YJ} condition agree",
    )
    def equivalents(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i, j in ctx.tuples(2):
                profile = hyj_equivalents(i, j, ctx.y, strong)
                expected = hyj(i, j, ctx.y)
                tally.expect(
                    all(v == expected for v in profile.verdicts.values()),
                    profile=profile.to_dict(),
                    **shown(strong, I=i, J=j),
                )


def _register_algebra(registry: Registry) -> None:
    @registry.check(
        "hyj.paired-meet",
        "If each I_k is an H_{YJ_k}-ideal, the meet of the I_k is an H_{YJ}-ideal"
        " for J the meet of the J_k",
        premise="I1 an H_{YJ1}-ideal and I2 an H_{YJ2}-ideal",
    )
    def paired_meet(ctx: CheckContext, tally: Tally) -> None:
        y, lattice = ctx.y, ctx.lattice
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i1, j1, i2, j2 in ctx.tuples(4):
                if not (hyj(i1, j1, y) and hyj(i2, j2, y)):
                    continue
                tally.expect(
                    hyj(meet(lattice, i1, i2), meet(lattice, j1, j2), y),
                    **shown(strong, I1=i1, J1=j1, I2=i2, J2=j2),
                )

    @registry.check(
        "hyj.factor-shrink",
        "An H_{YK}-ideal is an H_{YJ}-ideal for every J inside K",
        premise="J inside K and I an H_{YK}-ideal",
    )
    def factor_shrink(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i, j, k in ctx.tuples(3):
                if j <= k and hyj(i, k, ctx.y):
                    tally.expect(hyj(i, j, ctx.y), **shown(strong, I=i, J=j, K=k))

    @registry.check(
        "hyj.meet-closed",
        "For fixed J, H_{YJ}-ideals are closed under intersection",
        premise="two H_{YJ}-ideals",
    )
    def meet_closed(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i1, i2, j in ctx.tuples(3):
                if hyj(i1, j, ctx.y) and hyj(i2, j, ctx.y):
                    tally.expect(
                        hyj(meet(ctx.lattice, i1, i2), j, ctx.y), **shown(strong, I1=i1, I2=i2, J=j)
                    )

    @registry.check(
        "hyj.transitive",
        "I an H_{YJ}-ideal and J an H_{YK}-ideal make I an H_{YK}-ideal",
        premise="I an H_{YJ}-ideal and J an H_{YK}-ideal",
    )
    def transitive(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i, j, k in ctx.tuples(3):
                if hyj(i, j, ctx.y) and hyj(j, k, ctx.y):
                    tally.expect(hyj(i, k, ctx.y), **shown(strong, I=i, J=j, K=k))

    @registry.check(
        "hyj.radical-pair",
        "I an H_{YJ}-ideal makes √I an H_{Y√J}-ideal",
        premise="I an H_{YJ}-ideal",
    )
    def radical_pair(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i, j in ctx.tuples(2):
                if hyj(i, j, ctx.y):
                    tally.expect(hyj(radical(i), radical(j), ctx.y), **shown(strong, I=i, J=j))

    @registry.check(
        "hyj.meet-with-factor",
        "I is an H_{YJ}-ideal exactly when I ∩ J is",
    )
    def meet_with_factor(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i, j in ctx.tuples(2):
                tally.expect(
                    hyj(i, j, ctx.y) == hyj(meet(ctx.lattice, i, j), j, ctx.y),
                    **shown(strong, I=i, J=j),
                )

    @registry.check(
        "hyj.sum-with-factor",
        "I is an H_{YJ}-ideal exactly when it is an H_{Y(I+J)}-ideal",
    )
    def sum_with_factor(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i, j in ctx.tuples(2):
                tally.expect(
                    hyj(i, j, ctx.y) == hyj(i, ideal_sum(i, j), ctx.y), **shown(strong, I=i, J=j)
                )

    @registry.check(
        "hyj.inside-hy-factor",
        "Inside an H_Y-ideal J, the H_{YJ}-ideals are exactly the H_Y-ideals",
        premise="I inside an H_Y-ideal J",
    )
    def inside_hy_factor(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            hyj, pred, _ = predicates(strong)
            for i, j in ctx.tuples(2):
                if i <= j and pred(j, ctx.y):
                    tally.expect(hyj(i, j, ctx.y) == pred(i, ctx.y), **shown(strong, I=i, J=j))

    @registry.check(
        "hyj.meet-hy-factor",
        "For an H_Y-ideal J, I is an H_{YJ}-ideal exactly when I ∩ J is an H_Y-ideal",
        premise="J an H_Y-ideal",
    )
    def meet_hy_factor(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            hyj, pred, _ = predicates(strong)
            for i, j in ctx.tuples(2):
                if pred(j, ctx.y):
                    tally.expect(
                        hyj(i, j, ctx.y) == pred(meet(ctx.lattice, i, j), ctx.y),
                        **shown(strong, I=i, J=j),
                    )

    @registry.check(
        "hyj.symmetric-meet",
        "I ∩ J is H_{YI} and H_{YJ} exactly when I is H_{YJ} and J is H_{YI}",
    )
    def symmetric_meet(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i, j in ctx.tuples(2):
                both = meet(ctx.lattice, i, j)
                lhs = hyj(both, i, y) and hyj(both, j, y)
                rhs = hyj(i, j, y) and hyj(j, i, y)
                tally.expect(lhs == rhs, **shown(strong, I=i, J=j))

    @registry.check(
        "hyj.product-to-meet",
        "IK an H_{YJ}-ideal makes I ∩ K an H_{YJ}-ideal",
        premise="IK an H_{YJ}-ideal",
    )
    def product_to_meet(ctx: CheckContext, tally: Tally) -> None:
        products: dict[tuple[int, int], Ideal] = {}
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i, k, j in ctx.tuples(3):
                key = (i.members, k.members)
                if key not in products:
                    products[key] = product(i, k)
                if hyj(products[key], j, ctx.y):
                    tally.expect(
                        hyj(meet(ctx.lattice, i, k), j, ctx.y), **shown(strong, I=i, K=k, J=j)
                    )


def _register_closure_laws(registry: Registry) -> None:
    @registry.check(
        "hyj.least-containing-meet",
        "I_H ∩ J is the least H_{YJ}-ideal containing I ∩ J",
    )
    def least_containing_meet(ctx: CheckContext, tally: Tally) -> None:
        y, lattice = ctx.y, ctx.lattice
        for strong in VARIANTS:
            hyj, _, close = predicates(strong)
            families = {j.members: hyj_family(j, y, strong) for j in lattice}
            for i, j in ctx.tuples(2):
                base = meet(lattice, i, j)
                candidate = meet(lattice, close(i, y), j)
                above = [k for k in families[j.members] if base <= k]
                tally.expect(
                    hyj(candidate, j, y) and all(candidate <= k for k in above),
                    **shown(strong, I=i, J=j, candidate=candidate),
                )

    @registry.check(
        "hyj.same-closure-up",
        "An H_{YJ}-ideal I passes the property to every K above it with the same closure",
        premise="I inside K with equal closures and I an H_{YJ}-ideal",
    )
    def same_closure_up(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        for strong in VARIANTS:
            hyj, _, close = predicates(strong)
            for i, k, j in ctx.tuples(3):
                if i <= k and close(i, y) == close(k, y) and hyj(i, j, y):
                    tally.expect(hyj(k, j, y), **shown(strong, I=i, K=k, J=j))

    @registry.check(
        "hyj.between-closure",
        "An H_{YJ}-ideal I passes the property to every K between I and its closure",
        premise="I inside K inside the closure of I, I an H_{YJ}-ideal",
    )
    def between_closure(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        for strong in VARIANTS:
            hyj, _, close = predicates(strong)
            for i, k, j in ctx.tuples(3):
                if i <= k <= close(i, y) and hyj(i, j, y):
                    tally.expect(hyj(k, j, y), **shown(strong, I=i, K=k, J=j))

    @registry.check(
        "hyj.radical",
        "I an H_{YJ}-ideal makes √I an H_{YJ}-ideal",
        premise="I an H_{YJ}-ideal",
    )
    def radical_law(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i, j in ctx.tuples(2):
                if hyj(i, j, ctx.y):
                    tally.expect(hyj(radical(i), j, ctx.y), **shown(strong, I=i, J=j))

    @registry.check(
        "hyj.prime-factor-multiplicative",
        "I is an H_{YP}-ideal for some prime P exactly when I_H minus I is multiplicatively closed",
    )
    def prime_factor_multiplicative(ctx: CheckContext, tally: Tally) -> None:
        y, ring = ctx.y, ctx.ring
        primes = spec(ring, ctx.config)
        for strong in VARIANTS:
            hyj, _, close = predicates(strong)
            for i in ctx.lattice:
                lhs = any(hyj(i, p, y) for p in primes)
                gap = [a for a in close(i, y) if a not in i]
                closed = all(ring.mul(a, b) not in i for a in gap for b in gap)
                tally.expect(lhs == closed, H_Y_prime=lhs, closed=closed, **shown(strong, I=i))

    @registry.check(
        "hyj.non-hy-subideal",
        "J not an H_Y-ideal and not inside ⋂Y has a strong H_{YJ}-subideal that is not H_Y",
        premise="J not an H_Y-ideal and not inside ⋂Y",
    )
    def non_hy_subideal(ctx: CheckContext, tally: Tally) -> None:
        y, lattice = ctx.y, ctx.lattice
        k0 = y.kernel_all
        for strong in VARIANTS:
            _, pred, _ = predicates(strong)
            for j in lattice:
                if pred(j, y) or j <= k0:
                    continue
                found = any(
                    i < j and is_strong_hyj(i, j, y) and not pred(i, y) for i in lattice.below(j)
                )
                tally.expect(found, **shown(strong, J=j))


def _register_primes(registry: Registry) -> None:
    @registry.check(
        "hyj.minimal-prime-transfer",
        "I an H_{YJ}-ideal makes every prime minimal over I an H_{YJ}-ideal",
        premise="I an H_{YJ}-ideal",
    )
    def minimal_prime_transfer(ctx: CheckContext, tally: Tally) -> None:
        for i, j in ctx.tuples(2):
            report = prime_transfer_check(i, j, ctx.y)
            tally.examined += report.examined
            if report.verdict is Verdict.FAIL:
                tally.fail(**(report.witness or {}))
            for text in report.notes:
                tally.note(text)

    @registry.check(
        "hyj.prime-criterion",
        "A prime P is an H_{YJ}-ideal exactly when it is an H_Y-ideal or contains J",
    )
    def prime_criterion(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        primes = spec(ctx.ring, ctx.config)
        for strong in VARIANTS:
            hyj, pred, _ = predicates(strong)
            for p in primes:
                for j in ctx.lattice:
                    tally.expect(
                        hyj(p, j, y) == (pred(p, y) or j <= p), **shown(strong, P=p, J=j)
                    )

    @registry.check(
        "hyj.prime-meet-split",
        "I ∩ P an H_{YJ}-ideal for a prime P makes I or P an H_{YJ}-ideal",
        premise="I ∩ P an H_{YJ}-ideal",
    )
    def prime_meet_split(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        primes = spec(ctx.ring, ctx.config)
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i, j in ctx.tuples(2):
                for p in primes:
                    if hyj(meet(ctx.lattice, i, p), j, y):
                        tally.expect(
                            hyj(i, j, y) or hyj(p, j, y), **shown(strong, I=i, P=p, J=j)
                        )

    @registry.check(
        "hyj.incomparable-primes",
        "Incomparable primes whose meet is an H_{YJ}-ideal are both H_{YJ}-ideals",
        premise="incomparable primes P, Q with P ∩ Q an H_{YJ}-ideal",
    )
    def incomparable_primes(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        primes = spec(ctx.ring, ctx.config)
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for p, q in itertools.combinations(primes, 2):
                if p <= q or q <= p:
                    continue
                for j in ctx.lattice:
                    if hyj(meet(ctx.lattice, p, q), j, y):
                        tally.expect(
                            hyj(p, j, y) and hyj(q, j, y), **shown(strong, P=p, Q=q, J=j)
                        )

    @registry.check(
        "hyj.subspace-comparison",
        "Every H_{XJ}-ideal is H_{YJ} exactly when every prime H_X-ideal missing J is H_Y",
        scope="ring",
    )
    def subspace_comparison(ctx: CheckContext, tally: Tally) -> None:
        subspaces = ctx.subspaces()
        triples = list(itertools.product(subspaces, subspaces, ctx.lattice))
        budget = ctx.config.tuple_budget
        if len(triples) > budget:
            triples = ctx.rng("comparison").sample(triples, budget)
        for x, y, j in triples:
            report = comparison_check(x, y, j)
            tally.expect(report.verdict is not Verdict.FAIL, **(report.witness or {}))

