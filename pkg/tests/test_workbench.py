"""Tests for the query layer shared by the CLI and the tool server."""

from __future__ import annotations

import pytest

from hyideals.config import Config
from hyideals.report import Verdict
from hyideals.validation import CapExceeded, ValidationError
from hyideals.workbench import Workbench


def test_rings_are_cached_by_normalized_text(bench: Workbench) -> None:
    assert bench.ring("Z4 x Z9") is bench.ring(" Z4  x Z9 ")
    assert bench.ring("Z4 x Z9").name == "Z4 x Z9"


def test_ideal_from_labels(bench: Workbench) -> None:
    ring = bench.ring("Z2 x Z2")
    ideal = bench.ideal(ring, ["(1, 0)"])
    assert ideal.elements() == sorted([ring.zero, ring.parse_element("(1,0)")])


def test_ideal_needs_a_generator(bench: Workbench) -> None:
    with pytest.raises(ValidationError, match="At least one generator"):
        bench.ideal(bench.ring("Z4"), [])


def test_ring_over_cap() -> None:
    with pytest.raises(CapExceeded, match="cap is 16"):
        Workbench(Config(max_ring_size=16)).ring("Z30")


class TestRingQueries:
    def test_ring_show(self, bench: Workbench) -> None:
        data = bench.ring_show("Z4")
        assert data["elements"] == ["0", "1", "2", "3"]
        assert data["idempotents"] == ["0", "1"]
        assert data["nilpotents"] == ["0", "2"]
        assert data["local"] and not data["reduced"]
        assert not data["regular"] and not data["root_property"]

    def test_boolean_ring_is_regular(self, bench: Workbench) -> None:
        data = bench.ring_show("Z2 x Z2")
        assert data["regular"] and data["root_property"] and data["reduced"]

    def test_ideals(self, bench: Workbench) -> None:
        data = bench.ideals("Z12")
        assert data["count"] == 6
        assert data["ideals"][2] == {"label": "(4)", "members": ["0", "4", "8"]}

    def test_spectrum(self, bench: Workbench) -> None:
        data = bench.spectrum("Z12")
        assert data["spec"] == ["(3)", "(2)"]
        assert data["bourbaki"] == ["(3)", "(2)"]
        assert data["nilradical"] == "(6)"


class TestIdealQueries:
    def test_hy_check(self, bench: Workbench) -> None:
        data = bench.hy_check("Z12", "spec", ["6"])
        assert data["hy"] and data["strong"] and data["fixed"]
        assert data["profile"]["family"] == "hy[subsets]"
        assert all(data["strong_profile"]["verdicts"].values())

    def test_closure(self, bench: Workbench) -> None:
        data = bench.hy_closure("Z12", "spec", ["0"])
        assert data["closure"]["label"] == "(6)"
        assert data["kh"]["members"] == ["0", "6"]

    def test_fixed(self, bench: Workbench) -> None:
        data = bench.fixed("Z12", "spec", ["4"], "indices:[0]")
        assert data["maximal_fixed"] == ["(3)", "(2)"]
        assert data["inverse_image"] == "(2)"
        assert data["wrt"] == ["(3)"]
        assert data["fixed_wrt"] is False

    def test_fixed_without_subset(self, bench: Workbench) -> None:
        assert "fixed_wrt" not in bench.fixed("Z12", "spec", ["4"])

    def test_bad_wrt(self, bench: Workbench) -> None:
        with pytest.raises(ValidationError, match="--wrt"):
            bench.fixed("Z12", "spec", ["4"], "spec")

    def test_relative(self, bench: Workbench) -> None:
        data = bench.relative("Z12", "spec", ["0"])
        assert data["relative"] and data["relative_strong"]
        assert data["greatest_factor"] == {"label": "(4)", "trivial": False}
        assert data["factors"] == ["(4)"]
        assert "ideal" in data and data["ideal"]["label"] == "(0)"


class TestVerification:
    def test_run_one(self, bench: Workbench) -> None:
        (report,) = bench.run_one("hy.equivalents", "Z4")
        assert report["verdict"] == "pass"
        assert report["instance"] == {"ring": "Z4", "Y": "spec"}

    def test_separation_on_default_corpus(self, bench: Workbench) -> None:
        assert bench.separation().verdict is Verdict.PASS
