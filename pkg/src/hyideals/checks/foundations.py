"""Foundational checks: ring laws, the ideal lattice, the spectrum, closures and the oracles."""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING

from hyideals.bitset import bits, is_subset, mask_of
from hyideals.calculus import (
    hy_closure,
    hy_condition_profile,
    hy_inverse_image,
    is_hy_ideal,
    is_strong_hy_ideal,
    strong_condition_profile,
    strong_hy_closure,
    strong_hy_oracle,
)
from hyideals.checks.common import VARIANTS, meet, shown
from hyideals.ideals import (
    BRUTE_FORCE_MAX,
    brute_force_ideals,
    intersect_all,
    is_ideal_mask,
    is_semiprime,
    maxl,
    product,
    radical,
)
from hyideals.relative import (
    factors,
    is_relative_hy,
    is_relative_strong_hy,
    is_strong_hyj,
    predicates,
    strong_hyj_oracle,
)
from hyideals.ring import ring_law_violation
from hyideals.spectrum import (
    affiliated_primes,
    bourbaki,
    is_fixed_place,
    jacobson_radical,
    max_ideals,
    min_over,
    min_primes,
    nilradical,
    spec,
)
from hyideals.topology import closure, co_hull, hull

if TYPE_CHECKING:
    from hyideals.verifier import CheckContext, Registry, Tally


def register_checks(registry: Registry) -> None:
    @registry.check("ring.laws", "The tables satisfy every commutative ring law", scope="ring")
    def ring_laws(ctx: CheckContext, tally: Tally) -> None:
        found = ring_law_violation(
            ctx.ring, sample_size=ctx.config.law_sample_size, seed=ctx.config.seed
        )
        if found is None:
            tally.expect(True)
        else:
            law, elements = found
            tally.expect(False, law=law, elements=list(elements))

    @registry.check(
        "ideals.lattice-oracle",
        "The enumerated lattice is exactly the set of ideals",
        scope="ring",
    )
    def lattice_oracle(ctx: CheckContext, tally: Tally) -> None:
        masks = [ideal.members for ideal in ctx.lattice]
        if ctx.ring.size <= BRUTE_FORCE_MAX:
            oracle = brute_force_ideals(ctx.ring)
            known, found = set(masks), set(oracle)
            missing = [bits(m) for m in oracle if m not in known]
            extra = [bits(m) for m in masks if m not in found]
            tally.expect(oracle == masks, missing=missing[:1], extra=extra[:1])
            return
        tally.expect(ctx.lattice.is_complete(), law="closed under sum and meet")
        for m in masks:
            tally.expect(is_ideal_mask(ctx.ring, m), ideal=bits(m))

    @registry.check(
        "ideals.radical-laws",
        "Radicals commute with meets and products, are idempotent and meet Min(I)",
        scope="ring",
    )
    def radical_laws(ctx: CheckContext, tally: Tally) -> None:
        lattice = ctx.lattice
        for i in lattice:
            r = radical(i)
            tally.expect(radical(r) == r, law="idempotent", **shown(I=i))
            tally.expect(i <= r, law="extensive", **shown(I=i))
            tally.expect(intersect_all(ctx.ring, min_over(i)) == r, law="min-primes", **shown(I=i))
        for i, j in ctx.tuples(2):
            both = radical(i).members & radical(j).members
            pair = shown(I=i, J=j)
            tally.expect(radical(meet(lattice, i, j)).members == both, law="meet", **pair)
            tally.expect(radical(product(i, j)).members == both, law="product", **pair)

    @registry.check(
        "spectrum.prime-families",
        "Spec, Max and Min coincide; Jacobson radical, nilradical and affiliated primes agree",
        scope="ring",
    )
    def prime_families(ctx: CheckContext, tally: Tally) -> None:
        ring = ctx.ring
        primes = {p.members for p in spec(ring, ctx.config)}
        maximal = {p.members for p in max_ideals(ring)}
        tally.expect(maximal == primes, family="max")
        tally.expect({p.members for p in min_primes(ring)} == primes, family="min")
        proper_tops = {i.members for i in maxl(ctx.lattice.proper())}
        tally.expect(proper_tops == maximal, family="maximal proper ideals")
        nil = nilradical(ring)
        tally.expect(nil.members == mask_of(ring.nilpotents()), family="nilradical")
        tally.expect(jacobson_radical(ring) == nil, family="jacobson")
        for p in affiliated_primes(ring):
            tally.expect(p.members in primes, family="affiliated", **shown(P=p))

    @registry.check(
        "spectrum.bourbaki",
        "B(I) lies over I and contains Min(I); semi-prime ideals are fixed-place",
        scope="ring",
    )
    def bourbaki_primes(ctx: CheckContext, tally: Tally) -> None:
        for i in ctx.lattice:
            found = {p.members for p in bourbaki(i)}
            if i.is_whole:
                tally.expect(not found, law="B(R) is empty")
                continue
            tally.expect(all(is_subset(i.members, p) for p in found), law="over I", **shown(I=i))
            tally.expect(
                all(p.members in found for p in min_over(i)), law="Min(I) inside B(I)", **shown(I=i)
            )
            if is_semiprime(i):
                tally.expect(is_fixed_place(i), law="fixed-place", **shown(I=i))

    @registry.check(
        "topology.closure-laws",
        "Closure on Y satisfies the Kuratowski laws; hulls of ideals and element sets agree",
    )
    def closure_laws(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y

        def close(mask: int) -> int:
            return y.ideal_hull(y.kernel_of(mask))

        tally.expect(close(0) == 0, law="empty set")
        subsets = ctx.point_subsets()
        for s in subsets:
            c = close(s)
            tally.expect(closure(y, y.point_set(s)).members == c, law="closure", S=bits(s))
            tally.expect(is_subset(s, c), law="extensive", S=bits(s))
            tally.expect(close(c) == c, law="idempotent", S=bits(s))
        for s, t in itertools.product(subsets, repeat=2):
            tally.expect(close(s | t) == close(s) | close(t), law="union", S=bits(s), T=bits(t))
        for ideal in ctx.lattice:
            closed = hull(y, ideal).members
            tally.expect(closed == y.set_hull(ideal), law="ideal hull", **shown(I=ideal))
            opened = co_hull(y, ideal).members
            tally.expect(
                opened & closed == 0 and opened | closed == y.full,
                law="co-hull",
                **shown(I=ideal),
            )

    @registry.check("hy.equivalents", "Every H_Y-ideal condition agrees with the definition")
    def hy_equivalents(ctx: CheckContext, tally: Tally) -> None:
        for ideal in ctx.lattice:
            profile = hy_condition_profile(ideal, ctx.y, ctx.config)
            expected = is_hy_ideal(ideal, ctx.y)
            tally.expect(
                all(v == expected for v in profile.verdicts.values()),
                profile=profile.to_dict(),
                **shown(I=ideal),
            )

    @registry.check(
        "strong.equivalents", "Every strong H_Y-ideal condition agrees with the definition"
    )
    def strong_equivalents(ctx: CheckContext, tally: Tally) -> None:
        for ideal in ctx.lattice:
            profile = strong_condition_profile(ideal, ctx.y, ctx.config)
            expected = is_strong_hy_ideal(ideal, ctx.y)
            tally.expect(
                all(v == expected for v in profile.verdicts.values()),
                profile=profile.to_dict(),
                **shown(I=ideal),
            )

    @registry.check(
        "hy.lattice-laws",
        "H_Y-ideals are meet-closed; closures are closure operators above the radical",
    )
    def hy_lattice_laws(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        lattice = ctx.lattice
        for i in lattice:
            plain = hy_closure(i, y)
            strong = strong_hy_closure(i, y)
            tally.expect(
                not is_strong_hy_ideal(i, y) or is_hy_ideal(i, y),
                law="strong implies plain",
                **shown(I=i),
            )
            tally.expect(i <= radical(i) <= plain, law="I ⊆ √I ⊆ I_H", **shown(I=i))
            tally.expect(plain <= strong, law="I_H ⊆ I_SH", **shown(I=i))
            tally.expect(hy_closure(plain, y) == plain, law="idempotent", **shown(I=i))
            tally.expect(strong_hy_closure(strong, y) == strong, law="idempotent", **shown(I=i))
        for i, j in ctx.tuples(2):
            for variant in VARIANTS:
                _, pred, close = predicates(variant)
                if pred(i, y) and pred(j, y):
                    tally.expect(
                        pred(meet(lattice, i, j), y), law="meet", **shown(variant, I=i, J=j)
                    )
                if i <= j:
                    tally.expect(
                        close(i, y) <= close(j, y), law="monotone", **shown(variant, I=i, J=j)
                    )

    @registry.check(
        "oracle.strong",
        "The kh_Y(I) shortcut for strong predicates matches all finite subsets",
    )
    def strong_oracle(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        for i, j in ctx.tuples(2):
            tally.expect(
                strong_hyj_oracle(i, j, y) == is_strong_hyj(i, j, y),
                predicate="strong H_YJ",
                **shown(I=i, J=j),
            )
        if ctx.ring.size > ctx.config.strong_oracle_max:
            tally.note(f"subset oracle skipped above {ctx.config.strong_oracle_max} elements")
            return
        for i in ctx.lattice:
            tally.expect(
                strong_hy_oracle(i, y, ctx.config) == is_strong_hy_ideal(i, y),
                predicate="strong H_Y",
                **shown(I=i),
            )

    @registry.check(
        "oracle.closure",
        "Fixpoint closure, strong closure, kh_Y(I) and the filter inverse image coincide",
    )
    def closure_oracle(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        for i in ctx.lattice:
            plain = hy_closure(i, y)
            tally.expect(
                plain == strong_hy_closure(i, y) == y.kh(i) == hy_inverse_image(i, y),
                **shown(I=i, closure=plain),
            )

    @registry.check(
        "oracle.relative",
        "Factor search and principal witness agree; plain and strong relativity coincide",
    )
    def relative_oracle(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        lattice = ctx.lattice
        for i in lattice:
            verdicts = {False: is_relative_hy(i, y), True: is_relative_strong_hy(i, y)}
            for variant, verdict in verdicts.items():
                hyj, _, _ = predicates(variant)
                tally.expect(
                    bool(verdict) == bool(factors(i, y, variant)),
                    route="factor list",
                    **shown(variant, I=i),
                )
                if verdict.witness_element is not None:
                    c = lattice.principal(verdict.witness_element)
                    tally.expect(
                        hyj(i, c, y) and not c <= i,
                        route="principal witness",
                        **shown(variant, I=i, witness=c),
                    )
            tally.expect(
                bool(verdicts[False]) == bool(verdicts[True]), route="plain vs strong", **shown(I=i)
            )
