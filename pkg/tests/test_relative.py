"""Tests for H_{YJ}-ideals, relative H_Y-ideals and their factors."""

from __future__ import annotations

from collections.abc import Callable

import pytest

from hyideals.ideals import Ideal, IdealLattice, all_ideals
from hyideals.relative import (
    comparison_check,
    factor_k_minprimes,
    factor_report,
    factors,
    greatest_factor,
    hyj_equivalents,
    hyj_family,
    is_hyj,
    is_relative_hy,
    is_relative_strong_hy,
    is_strong_hyj,
    minimal_factor_check,
    prime_transfer_check,
    principal_relative_check,
    relative_by_factor,
    relative_by_principal,
    relative_via_colon,
    semiprime_representation_check,
    strong_hyj_oracle,
)
from hyideals.report import Verdict
from hyideals.ring import FiniteRing
from hyideals.topology import SubSpace, select_subspace
from hyideals.validation import NotSemiprime, PremiseFailed

IdealMaker = Callable[..., Ideal]
RingFactory = Callable[[str], FiniteRing]


def _labels(ideals: list[Ideal]) -> list[str]:
    return [i.label() for i in ideals]


class TestHYJ:
    def test_examples(self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker) -> None:
        assert not is_hyj(ideal(z12, 4), ideal(z12, 3), spec12)
        assert is_hyj(ideal(z12, 0), ideal(z12, 4), spec12)
        assert not is_hyj(ideal(z12, 0), ideal(z12, 3), spec12)

    def test_every_ideal_is_its_own_factor(
        self, lattice12: IdealLattice, spec12: SubSpace
    ) -> None:
        for i in lattice12:
            assert is_strong_hyj(i, i, spec12)
            assert is_hyj(i, i, spec12)

    def test_strong_oracle(self, lattice12: IdealLattice, spec12: SubSpace) -> None:
        for i in lattice12:
            for j in lattice12:
                assert strong_hyj_oracle(i, j, spec12) == is_strong_hyj(i, j, spec12)

    @pytest.mark.parametrize("strong", [False, True])
    def test_equivalents_all_true(
        self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker, strong: bool
    ) -> None:
        profile = hyj_equivalents(ideal(z12, 0), ideal(z12, 4), spec12, strong)
        assert len(profile.verdicts) == 6
        assert all(profile.verdicts.values())

    @pytest.mark.parametrize("strong", [False, True])
    def test_equivalents_all_false(
        self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker, strong: bool
    ) -> None:
        profile = hyj_equivalents(ideal(z12, 4), ideal(z12, 3), spec12, strong)
        assert not any(profile.verdicts.values())

    def test_family(self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker) -> None:
        # everything H_Y plus what kh_Y(a) ∩ (4) keeps inside
        family = _labels(hyj_family(ideal(z12, 4), spec12))
        assert "(0)" in family
        assert "(4)" in family
        assert "R" in family


class TestRelative:
    def test_four_is_not_relative(
        self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker
    ) -> None:
        assert not is_relative_hy(ideal(z12, 4), spec12)
        assert not is_relative_strong_hy(ideal(z12, 4), spec12)

    def test_zero_is_relative(self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker) -> None:
        verdict = is_relative_hy(ideal(z12, 0), spec12)
        assert verdict
        assert verdict.factor is not None and verdict.factor.label() == "(4)"
        assert verdict.witness_element == 4

    def test_hy_ideals_are_relative(self, lattice12: IdealLattice, spec12: SubSpace) -> None:
        from hyideals.calculus import is_hy_ideal

        for i in lattice12:
            if i.is_proper and is_hy_ideal(i, spec12):
                assert is_relative_hy(i, spec12)

    def test_routes_agree(self, lattice12: IdealLattice, spec12: SubSpace) -> None:
        for strong in (False, True):
            for i in lattice12:
                by_factor = relative_by_factor(i, spec12, strong) is not None
                by_principal = relative_by_principal(i, spec12, strong) is not None
                assert by_factor == by_principal

    def test_whole_ring_is_not_relative(self, lattice12: IdealLattice, spec12: SubSpace) -> None:
        assert not is_relative_hy(lattice12.whole, spec12)


class TestFactors:
    def test_greatest_factor_goldens(
        self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker
    ) -> None:
        zero = greatest_factor(ideal(z12, 0), spec12)
        assert zero.ideal.label() == "(4)"
        assert not zero.trivial and zero.has_maximum
        four = greatest_factor(ideal(z12, 4), spec12)
        assert four.ideal.label() == "(4)"
        assert four.trivial and not four.has_maximum
        assert greatest_factor(ideal(z12, 6), spec12).ideal.is_whole

    def test_strong_greatest_factor(
        self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker
    ) -> None:
        assert greatest_factor(ideal(z12, 0), spec12, strong=True).ideal.label() == "(4)"

    def test_factor_report(self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker) -> None:
        report = factor_report(ideal(z12, 0), spec12).to_dict()
        assert report["ideal"] == "(0)"
        assert report["factors"] == ["(4)"]
        assert report["greatest"] == "(4)"
        assert report["minimal"] == ["(4)"]
        assert report["strong_factors"] == ["(4)"]

    def test_no_factors(self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker) -> None:
        report = factor_report(ideal(z12, 4), spec12)
        assert report.factors == []
        assert report.greatest is None

    def test_trivial_factors_included_on_request(
        self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker
    ) -> None:
        found = factors(ideal(z12, 4), spec12, include_trivial=True)
        assert _labels(found) == ["(0)", "(4)"]

    def test_boolean_square_minimal_factors(self, ring_of: RingFactory) -> None:
        ring = ring_of("Z2 x Z2")
        y = select_subspace(ring, "spec")
        report = factor_report(all_ideals(ring).zero, y)
        assert len(report.factors) == 3
        assert len(report.minimal) == 2
        assert report.greatest is not None and report.greatest.is_whole

    def test_minimal_prime_meet(self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker) -> None:
        assert factor_k_minprimes(ideal(z12, 6), spec12).is_whole
        one_point = select_subspace(z12, "indices:[1]")
        assert factor_k_minprimes(ideal(z12, 6), one_point).label() == "(3)"


class TestReportChecks:
    def test_minimal_factor_characterization(
        self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker
    ) -> None:
        report = minimal_factor_check(ideal(z12, 0), ideal(z12, 4), spec12)
        assert report.verdict is Verdict.PASS

    def test_comparison_with_itself(
        self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker
    ) -> None:
        report = comparison_check(spec12, spec12, ideal(z12, 3))
        assert report.verdict is Verdict.PASS
        assert report.instance.Y == "spec->spec"

    def test_comparison_spec_to_point(self, z12: FiniteRing, ideal: IdealMaker) -> None:
        x = select_subspace(z12, "spec")
        y = select_subspace(z12, "indices:[1]")
        assert comparison_check(x, y, ideal(z12, 3)).verdict is Verdict.PASS

    def test_semiprime_representation(
        self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker
    ) -> None:
        assert semiprime_representation_check(ideal(z12, 6), spec12).verdict is Verdict.PASS
        with pytest.raises(NotSemiprime):
            semiprime_representation_check(ideal(z12, 4), spec12)

    def test_via_colon(self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker) -> None:
        assert relative_via_colon(ideal(z12, 6), spec12).verdict is Verdict.PASS
        assert relative_via_colon(ideal(z12, 4), spec12).verdict is Verdict.VACUOUS

    def test_principal_root(self, ring_of: RingFactory) -> None:
        ring = ring_of("Z2 x Z2")
        y = select_subspace(ring, "spec")
        report = principal_relative_check(ring.parse_element("(1,0)"), y)
        assert report.verdict is Verdict.PASS
        assert report.witness is None

    def test_principal_root_needs_root_property(self, z4: FiniteRing) -> None:
        y = select_subspace(z4, "spec")
        with pytest.raises(PremiseFailed, match="root property"):
            principal_relative_check(2, y)

    def test_prime_transfer(self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker) -> None:
        report = prime_transfer_check(ideal(z12, 0), ideal(z12, 4), spec12)
        assert report.verdict is Verdict.PASS
        assert report.examined == 2
