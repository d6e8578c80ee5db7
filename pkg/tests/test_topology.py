"""Tests for subspaces of Spec(R): hulls, kernels, closures, selectors and compactness."""

from __future__ import annotations

from collections.abc import Callable

import pytest

from hyideals.ideals import Ideal
from hyideals.report import Verdict
from hyideals.ring import FiniteRing
from hyideals.topology import (
    SubSpace,
    closure,
    co_hull,
    compactification,
    enumerate_subspaces,
    hull,
    is_compact,
    is_y_hilbert,
    kernel,
    select_subspace,
    subbasic_cover_check,
    verify_compactness_equivalents,
)
from hyideals.validation import ValidationError

IdealMaker = Callable[..., Ideal]


def _labels(ideals: list[Ideal]) -> list[str]:
    return [i.label() for i in ideals]


class TestHullAndKernel:
    def test_element_hulls(self, spec12: SubSpace) -> None:
        assert spec12.element_hull(0) == spec12.full
        assert spec12.element_hull(1) == 0
        assert _labels(spec12.points_of(spec12.element_hull(4))) == ["(2)"]

    def test_hull_of_ideal(self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker) -> None:
        assert _labels(hull(spec12, ideal(z12, 4)).points()) == ["(2)"]
        assert hull(spec12, [0]).members == spec12.full
        assert hull(spec12, [1]).is_empty

    def test_kernels(self, spec12: SubSpace) -> None:
        assert spec12.kernel_all.label() == "(6)"
        assert spec12.kernel_of(0).is_whole
        assert kernel(spec12.point_set(0b10)).label() == "(2)"

    def test_kh(self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker) -> None:
        assert spec12.kh_element(4).label() == "(2)"
        assert spec12.kh_element(0).label() == "(6)"
        assert spec12.kh(ideal(z12, 4)).label() == "(2)"

    def test_co_hull(self, spec12: SubSpace) -> None:
        assert _labels(co_hull(spec12, [4]).points()) == ["(3)"]

    def test_closure(self, spec12: SubSpace) -> None:
        assert closure(spec12, spec12.point_set(0)).is_empty
        assert closure(spec12, spec12.point_set(spec12.full)).members == spec12.full
        assert _labels(closure(spec12, spec12.point_set(0b10)).points()) == ["(2)"]

    def test_y_hilbert(self, z12: FiniteRing, spec12: SubSpace, ideal: IdealMaker) -> None:
        assert is_y_hilbert(ideal(z12, 6), spec12)
        assert not is_y_hilbert(ideal(z12, 4), spec12)
        assert is_y_hilbert(ideal(z12, 1), spec12)

    def test_empty_subspace(self, z12: FiniteRing) -> None:
        empty = select_subspace(z12, "indices:[]")
        assert empty.is_empty
        assert empty.kernel_all.is_whole
        assert empty.kh_element(0).is_whole


class TestSelectors:
    def test_named(self, z12: FiniteRing) -> None:
        assert select_subspace(z12, "max").label == "max"
        assert len(select_subspace(z12, "min")) == 2

    def test_indices(self, z12: FiniteRing) -> None:
        y = select_subspace(z12, "indices:[1]")
        assert y.label == "indices:[1]"
        assert _labels(list(y.points)) == ["(2)"]

    def test_out_of_range(self, z12: FiniteRing) -> None:
        with pytest.raises(ValidationError, match="out of range"):
            select_subspace(z12, "indices:[5]")

    def test_repeated_index(self, z12: FiniteRing) -> None:
        with pytest.raises(ValidationError, match="repeats an index"):
            select_subspace(z12, "indices:[0,0]")

    def test_unknown_selector(self, z12: FiniteRing) -> None:
        with pytest.raises(ValidationError, match="Invalid subspace selector"):
            select_subspace(z12, "primes")

    def test_all_subsets_is_not_a_single_subspace(self, z12: FiniteRing) -> None:
        with pytest.raises(ValidationError, match="several subspaces"):
            select_subspace(z12, "all-subsets")

    def test_enumerate_deduplicates(self, z12: FiniteRing) -> None:
        labels = [y.label for y in enumerate_subspaces(z12, ["all-subsets"])]
        assert labels == ["spec", "indices:[]", "indices:[0]", "indices:[1]"]

    def test_points_must_be_prime(self, z12: FiniteRing, ideal: IdealMaker) -> None:
        with pytest.raises(ValidationError, match="not prime"):
            SubSpace(z12, [ideal(z12, 4)])

    def test_points_must_be_distinct(self, z12: FiniteRing, ideal: IdealMaker) -> None:
        with pytest.raises(ValidationError, match="distinct"):
            SubSpace(z12, [ideal(z12, 2), ideal(z12, 2)])

    def test_restrict(self, spec12: SubSpace) -> None:
        y = spec12.restrict(0b10)
        assert y.label == "spec|[1]"
        assert _labels(list(y.points)) == ["(2)"]


class TestCompactness:
    def test_finite_spaces_are_compact(self, z12: FiniteRing, spec12: SubSpace) -> None:
        assert is_compact(spec12)[0]
        assert is_compact(select_subspace(z12, "indices:[]"))[0]
        assert subbasic_cover_check(spec12)

    def test_equivalents_on_spec(self, spec12: SubSpace) -> None:
        assert verify_compactness_equivalents(spec12).verdict is Verdict.PASS

    def test_equivalents_on_empty_subspace(self, z12: FiniteRing) -> None:
        report = verify_compactness_equivalents(select_subspace(z12, "indices:[]"))
        assert report.verdict is Verdict.DEGENERATE

    def test_compactification_of_spec_is_spec(self, spec12: SubSpace) -> None:
        z = compactification(spec12)
        assert z.point_masks() == spec12.point_masks()

    def test_compactification_of_one_point(self, z12: FiniteRing) -> None:
        z = compactification(select_subspace(z12, "indices:[1]"))
        assert _labels(list(z.points)) == ["(2)"]
