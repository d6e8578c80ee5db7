"""Checks on relative H_Y-ideals."""

from __future__ import annotations

from typing import TYPE_CHECKING

from hyideals.checks.common import VARIANTS, kind, meet, shown
from hyideals.ideals import is_semiprime
from hyideals.relative import (
    is_relative_hy,
    is_relative_strong_hy,
    predicates,
    principal_relative_check,
    relative_by_factor,
    relative_by_principal,
    relative_via_colon,
    semiprime_representation_check,
)
from hyideals.report import Verdict
from hyideals.ring import has_root_property, is_regular
from hyideals.spectrum import min_over, spec
from hyideals.validation import PremiseFailed

if TYPE_CHECKING:
    from hyideals.ideals import Ideal
    from hyideals.topology import SubSpace
    from hyideals.verifier import CheckContext, Registry, Tally


def _relative(ideal: Ideal, y: SubSpace, strong: bool) -> bool:
    return bool(is_relative_strong_hy(ideal, y) if strong else is_relative_hy(ideal, y))


def register_checks(registry: Registry) -> None:
    @registry.check("relative.strong-implies-plain", "Relative strong H_Y-ideals are relative")
    def strong_implies_plain(ctx: CheckContext, tally: Tally) -> None:
        for i in ctx.lattice:
            if _relative(i, ctx.y, strong=True):
                tally.expect(_relative(i, ctx.y, strong=False), **shown(I=i))

    @registry.check(
        "relative.hy-is-relative",
        "Every proper H_Y-ideal is a relative H_Y-ideal",
        premise="a proper H_Y-ideal",
    )
    def hy_is_relative(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            _, pred, _ = predicates(strong)
            for i in ctx.lattice:
                if not pred(i, ctx.y):
                    continue
                if i.is_whole:
                    tally.note("R has no factor outside itself; only proper ideals are checked")
                    continue
                tally.expect(_relative(i, ctx.y, strong), **shown(strong, I=i))

    @registry.check(
        "relative.minimal-prime-witness",
        "A relative H_Y-ideal has a minimal prime that is an H_Y-ideal",
        premise="a relative H_Y-ideal",
    )
    def minimal_prime_witness(ctx: CheckContext, tally: Tally) -> None:
        for strong in VARIANTS:
            _, pred, _ = predicates(strong)
            for i in ctx.lattice:
                if _relative(i, ctx.y, strong):
                    tally.expect(
                        any(pred(p, ctx.y) for p in min_over(i)), **shown(strong, I=i)
                    )

    @registry.check(
        "relative.strict-superset",
        "I is relative exactly when it is an H_{YJ}-ideal for some J strictly above it",
    )
    def strict_superset(ctx: CheckContext, tally: Tally) -> None:
        lattice = ctx.lattice
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i in lattice:
                above = any(hyj(i, j, ctx.y) for j in lattice.above(i) if j != i)
                tally.expect(_relative(i, ctx.y, strong) == above, **shown(strong, I=i))

    @registry.check(
        "relative.same-closure-up",
        "Relativity passes to every K above I with the same closure",
        premise="I relative, I inside K and equal closures",
    )
    def same_closure_up(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        for strong in VARIANTS:
            _, _, close = predicates(strong)
            for i, k in ctx.tuples(2):
                if i <= k and close(i, y) == close(k, y) and _relative(i, y, strong):
                    tally.expect(_relative(k, y, strong), **shown(strong, I=i, K=k))

    @registry.check(
        "relative.between-closure",
        "Relativity passes to every K between I and its closure",
        premise="I relative and I inside K inside the closure of I",
    )
    def between_closure(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        for strong in VARIANTS:
            _, _, close = predicates(strong)
            for i, k in ctx.tuples(2):
                if i <= k <= close(i, y) and _relative(i, y, strong):
                    tally.expect(_relative(k, y, strong), **shown(strong, I=i, K=k))

    @registry.check(
        "relative.prime-meet-split",
        "I ∩ P relative for a prime P makes I or P relative",
        premise="I ∩ P relative",
    )
    def prime_meet_split(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        primes = spec(ctx.ring, ctx.config)
        for strong in VARIANTS:
            for i in ctx.lattice:
                for p in primes:
                    if _relative(meet(ctx.lattice, i, p), y, strong):
                        tally.expect(
                            _relative(i, y, strong) or _relative(p, y, strong),
                            **shown(strong, I=i, P=p),
                        )

    @registry.check(
        "relative.principal-witness",
        "I is relative exactly when some principal ideal outside I is a factor",
    )
    def principal_witness(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        for strong in VARIANTS:
            hyj, _, _ = predicates(strong)
            for i in ctx.lattice:
                factor = relative_by_factor(i, y, strong)
                element = relative_by_principal(i, y, strong)
                tally.expect(
                    (factor is None) == (element is None),
                    route="factor vs principal",
                    **shown(strong, I=i),
                )
                if element is not None:
                    c = ctx.lattice.principal(element)
                    tally.expect(
                        hyj(i, c, y) and not c <= i, witness=element, **shown(strong, I=i)
                    )

    @registry.check(
        "relative.via-colon",
        "K0 inside I with (K0 : I) not inside I makes I a relative strong H_Y-ideal",
        premise="K0 inside I and (K0 : I) not inside I",
    )
    def via_colon(ctx: CheckContext, tally: Tally) -> None:
        for i in ctx.lattice:
            report = relative_via_colon(i, ctx.y)
            if report.verdict is Verdict.VACUOUS:
                continue
            tally.expect(report.ok, **(report.witness or {}))

    @registry.check(
        "relative.principal-root",
        "With the root property and K0 inside <a>: <a> is relative strong iff (K0 : a) ⊄ <a>",
        premise="root property and K0 inside <a>",
    )
    def principal_root(ctx: CheckContext, tally: Tally) -> None:
        if not has_root_property(ctx.ring):
            return
        for a in ctx.ring.elements:
            try:
                report = principal_relative_check(a, ctx.y)
            except PremiseFailed:
                continue
            tally.expect(report.ok, **(report.witness or {}))

    @registry.check(
        "relative.semiprime-representation",
        "A semi-prime I is relative iff every prime representation of I has an H_Y member",
        premise="I semi-prime",
    )
    def semiprime_representation(ctx: CheckContext, tally: Tally) -> None:
        for i in ctx.lattice:
            if not is_semiprime(i):
                continue
            report = semiprime_representation_check(i, ctx.y, ctx.config)
            if report.verdict is Verdict.SKIPPED:
                tally.skip(report.notes[0])
                return
            tally.expect(report.ok, **(report.witness or {}))

    @registry.check(
        "relative.regularity",
        "With ⋂Y = (0): all proper ideals relative strong ⟺ all relative ⟺ R regular",
        scope="ring",
    )
    def regularity(ctx: CheckContext, tally: Tally) -> None:
        ring = ctx.ring
        regular = is_regular(ring)
        proper = ctx.lattice.proper()
        found = False
        for y in ctx.subspaces():
            if not y.kernel_all.is_zero:
                continue
            found = True
            sides = {
                kind(strong): all(_relative(i, y, strong) for i in proper) for strong in VARIANTS
            }
            tally.expect(
                sides["strong"] == sides["plain"] == regular, Y=y.label, regular=regular, **sides
            )
        if found:
            return
        if regular:
            tally.fail(regular=True, reason="no subspace meets in (0)")
        else:
            tally.note(f"{ring.name} is not regular and no Y meets in (0)")
