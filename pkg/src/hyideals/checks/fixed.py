"""Checks on fixed and free ideals, compactness and the compactification."""

from __future__ import annotations

from collections.abc import Iterable
from typing import TYPE_CHECKING

from hyideals.bitset import bits
from hyideals.calculus import (
    HYFilter,
    filter_intersection,
    hy_inverse_image,
    is_fixed,
    is_fixed_wrt,
    is_hy_ideal,
    maximal_fixed,
    maximal_fixed_wrt,
    maxl_pshy,
    subring_restriction_check,
)
from hyideals.checks.common import shown
from hyideals.ideals import Ideal, maxl
from hyideals.report import Verdict
from hyideals.ring import unital_subrings
from hyideals.spectrum import bourbaki, min_primes
from hyideals.topology import (
    COVER_CHECK_MAX,
    compactification,
    hull,
    is_compact,
    is_y_hilbert,
    subbasic_cover_check,
    verify_compactness_equivalents,
)

if TYPE_CHECKING:
    from hyideals.verifier import CheckContext, Registry, Tally


def _masks(ideals: Iterable[Ideal]) -> list[list[int]]:
    return sorted(bits(i.members) for i in ideals)


def register_checks(registry: Registry) -> None:
    @registry.check("fixed.filter-meet-is-hull", "The members of H_Y(I) meet in h_Y(I)")
    def filter_meet(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        for ideal in ctx.lattice:
            closed = hull(y, ideal).members
            tally.expect(closed in HYFilter(y, ideal), law="hull is a member", **shown(I=ideal))
            tally.expect(filter_intersection(ideal, y).members == closed, **shown(I=ideal))

    @registry.check(
        "fixed.hilbert-is-fixed",
        "Proper Y-Hilbert ideals are fixed H_Y-ideals",
        premise="a proper Y-Hilbert ideal",
    )
    def hilbert_is_fixed(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        for ideal in ctx.lattice:
            if not is_y_hilbert(ideal, y):
                continue
            if ideal.is_whole:
                tally.note("R is Y-Hilbert and free; only proper ideals are checked")
                continue
            tally.expect(is_fixed(ideal, y) and is_hy_ideal(ideal, y), **shown(I=ideal))

    @registry.check(
        "fixed.inverse-image-fixedness",
        "I is fixed exactly when the inverse image of its filter is fixed",
    )
    def inverse_image_fixedness(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        for ideal in ctx.lattice:
            image = hy_inverse_image(ideal, y)
            tally.expect(
                is_fixed(ideal, y) == is_fixed(image, y), **shown(I=ideal, inverse_image=image)
            )

    @registry.check(
        "fixed.inverse-image-whole-ring",
        "The inverse image of H_Y(I) is R exactly when I is not inside the union of Y",
    )
    def inverse_image_whole(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        union = 0
        for p in y.points:
            union |= p.members
        for ideal in ctx.lattice:
            outside = ideal.members & ~union != 0
            tally.expect(hy_inverse_image(ideal, y).is_whole == outside, **shown(I=ideal))

    @registry.check("fixed.maximal-are-points", "The maximal fixed H_Y-ideals are maxl(Y)")
    def maximal_are_points(ctx: CheckContext, tally: Tally) -> None:
        found = _masks(maximal_fixed(ctx.y))
        expected = _masks(maxl(ctx.y.points))
        tally.expect(found == expected, found=found, expected=expected)

    @registry.check(
        "fixed.compactness-equivalents",
        "Each compactness condition holds together with compactness of Y",
    )
    def compactness(ctx: CheckContext, tally: Tally) -> None:
        report = verify_compactness_equivalents(ctx.y)
        tally.examined += report.examined
        if report.verdict is Verdict.FAIL:
            tally.fail(**(report.witness or {}))
        if ctx.ring.size <= COVER_CHECK_MAX:
            tally.expect(subbasic_cover_check(ctx.y), condition="subbasic cover")

    @registry.check(
        "fixed.bourbaki-in-minimal-subspace",
        "A compact Y of minimal primes meeting in (0) contains the Bourbaki primes of (0)",
        premise="Y inside Min(R) with ⋂Y = (0)",
    )
    def bourbaki_in_minimal(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        minimal = {p.members for p in min_primes(ctx.ring)}
        points = y.point_masks()
        if not points <= minimal or not y.kernel_all.is_zero:
            return
        found = bourbaki(ctx.lattice.zero)
        tally.expect(
            is_compact(y)[0] and all(p.members in points for p in found),
            bourbaki=_masks(found),
        )

    @registry.check(
        "fixed.compactification",
        "Y together with maxl(PSH_Y) is a compact space containing Y densely",
    )
    def compactification_check(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        z = compactification(y)
        points = z.point_masks()
        tally.expect(y.point_masks() <= points, law="Y inside Z")
        outside = [m for m in maxl_pshy(ctx.ring, z) if m.members not in points]
        tally.expect(not outside, law="maxl(PSH_Z) inside Z", outside=_masks(outside))
        tally.expect(is_compact(z)[0], law="compact")

    @registry.check(
        "fixed.wrt-subset",
        "Fixed with respect to S is the same as fixed over the subspace S",
    )
    def wrt_subset(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        for s in ctx.point_subsets():
            subset = y.point_set(s)
            sub = y.restrict(s)
            for ideal in ctx.lattice:
                wrt = is_fixed_wrt(ideal, subset, y)
                tally.expect(wrt == is_fixed(ideal, sub), S=bits(s), **shown(I=ideal))
                tally.expect(not wrt or is_fixed(ideal, y), law="implies fixed", S=bits(s))

    @registry.check(
        "fixed.maximal-wrt-subset",
        "The maximal ideals fixed with respect to S are maxl(Y) ∩ S",
    )
    def maximal_wrt_subset(ctx: CheckContext, tally: Tally) -> None:
        y = ctx.y
        tops = {p.members for p in maxl(y.points)}
        for s in ctx.point_subsets():
            found = _masks(maximal_fixed_wrt(y.point_set(s), y))
            expected = _masks([p for p in y.points_of(s) if p.members in tops])
            tally.expect(found == expected, S=bits(s), found=found, expected=expected)

    @registry.check(
        "fixed.subring-restriction",
        "A fixed ideal stays fixed after contracting to a unital subring",
    )
    def subring_restriction(ctx: CheckContext, tally: Tally) -> None:
        for members in unital_subrings(ctx.ring):
            for ideal in ctx.lattice:
                report = subring_restriction_check(ctx.ring, bits(members), ctx.y, ideal)
                tally.expect(report.verdict is not Verdict.FAIL, **(report.witness or {}))
