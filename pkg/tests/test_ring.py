"""Tests for ring construction, the law audit and ring-level predicates."""

from __future__ import annotations

from collections.abc import Callable

import pytest

from hyideals.config import Config
from hyideals.corpus import load_corpus
from hyideals.ring import (
    FiniteRing,
    ProductSpec,
    QuotPolySpec,
    TablesSpec,
    ZnSpec,
    build_ring,
    describe_spec,
    generated_subring,
    has_root_property,
    is_arithmetical,
    is_regular,
    ring_law_violation,
    spec_size,
    subring,
    unital_subrings,
)
from hyideals.validation import AxiomViolation, BadSpec, CapExceeded, NotASubring, ValidationError

RingFactory = Callable[[str], FiniteRing]

Z2_TABLES = TablesSpec(size=2, add=((0, 1), (1, 0)), mul=((0, 0), (0, 1)))


class TestConstruction:
    def test_zn_elements_are_residues(self) -> None:
        ring = build_ring(ZnSpec(n=12))
        assert ring.size == 12
        assert ring.add(7, 8) == 3
        assert ring.mul(5, 7) == 11
        assert ring.neg(5) == 7
        assert ring.labels() == tuple(str(a) for a in range(12))

    def test_quotient_ring_gf4(self) -> None:
        ring = build_ring(QuotPolySpec(n=2, f=(1, 1, 1)))
        assert ring.size == 4
        x = ring.parse_element("x")
        assert ring.mul(x, x) == ring.parse_element("x+1")
        assert ring.units() == [1, 2, 3]

    def test_quotient_reduces_coefficients(self) -> None:
        ring = build_ring(QuotPolySpec(n=2, f=(3, 0, 0)))
        assert ring.spec.f == (1, 0, 0)
        x = ring.parse_element("x")
        assert ring.mul(x, x) == ring.zero

    def test_product_is_componentwise(self) -> None:
        ring = build_ring(ProductSpec(factors=(ZnSpec(n=2), ZnSpec(n=3))))
        assert ring.size == 6
        a = ring.parse_element("(1,2)")
        b = ring.parse_element("(1, 1)")
        assert ring.label(ring.mul(a, b)) == "(1,2)"
        assert ring.label(ring.add(a, b)) == "(0,0)"
        assert ring.label(ring.one) == "(1,1)"

    def test_build_is_deterministic(self, ring_of: RingFactory) -> None:
        first = ring_of("Z4 x GF(4)")
        second = ring_of("Z4 x GF(4)")
        assert first.tables() == second.tables()
        assert first.labels() == second.labels()

    def test_name_override(self) -> None:
        assert build_ring(ZnSpec(n=5), name="F5").name == "F5"

    def test_describe_spec(self) -> None:
        spec = ProductSpec(factors=(ZnSpec(n=4), QuotPolySpec(n=2, f=(1, 1, 1))))
        assert describe_spec(spec) == "Z4 x Z2[x]/(x^2+x+1)"
        assert spec_size(spec) == 16

    def test_tables_ring(self) -> None:
        ring = build_ring(Z2_TABLES)
        assert ring.size == 2
        assert ring.is_reduced()


class TestSpecErrors:
    def test_modulus_too_small(self) -> None:
        with pytest.raises(BadSpec, match="at least 2"):
            build_ring(ZnSpec(n=1))

    def test_non_monic_modulus(self) -> None:
        with pytest.raises(BadSpec, match="not monic"):
            build_ring(QuotPolySpec(n=4, f=(2, 1)))

    def test_constant_modulus(self) -> None:
        with pytest.raises(BadSpec, match="degree at least 1"):
            build_ring(QuotPolySpec(n=5, f=(1,)))

    def test_size_cap(self) -> None:
        with pytest.raises(CapExceeded, match="cap is 16"):
            build_ring(ZnSpec(n=17), Config(max_ring_size=16))

    def test_hard_limit_is_absolute(self) -> None:
        with pytest.raises(CapExceeded, match="hard limit"):
            build_ring(ZnSpec(n=5000))

    def test_table_shape(self) -> None:
        bad = TablesSpec(size=2, add=((0, 1),), mul=((0, 0), (0, 1)))
        with pytest.raises(BadSpec, match="2x2"):
            build_ring(bad)

    def test_table_identity_violation(self) -> None:
        # constant multiplication: 0 * 1 is not 0
        bad = TablesSpec(size=2, add=((0, 1), (1, 0)), mul=((1, 1), (1, 1)))
        with pytest.raises(AxiomViolation) as info:
            build_ring(bad)
        assert info.value.law == "multiplicative identity"

    def test_zero_equals_one(self) -> None:
        bad = Z2_TABLES.model_copy(update={"one": 0})
        with pytest.raises(AxiomViolation, match="zero != one"):
            build_ring(bad)

    def test_duplicate_labels(self) -> None:
        bad = Z2_TABLES.model_copy(update={"labels": ("a", "a")})
        with pytest.raises(BadSpec, match="unique"):
            build_ring(bad)

    def test_unknown_element(self, ring_of: RingFactory) -> None:
        with pytest.raises(ValidationError, match="Unknown element"):
            ring_of("Z4").parse_element("7")


class TestLawAudit:
    @pytest.mark.parametrize("dsl", ["Z12", "GF(4)", "Z2 x Z3", "Z2[x]/(x^2)", "Z4 x Z2"])
    def test_structured_rings_satisfy_laws(self, ring_of: RingFactory, dsl: str) -> None:
        assert ring_law_violation(ring_of(dsl)) is None


class TestPredicates:
    def test_units_idempotents_nilpotents(self, ring_of: RingFactory) -> None:
        ring = ring_of("Z12")
        assert ring.units() == [1, 5, 7, 11]
        assert ring.idempotents() == [0, 1, 4, 9]
        assert ring.nilpotents() == [0, 6]
        assert not ring.is_reduced()
        assert not ring.is_local()

    def test_local(self, ring_of: RingFactory) -> None:
        assert ring_of("Z4").is_local()
        assert ring_of("Z2[x]/(x^2)").is_local()
        assert ring_of("GF(4)").is_local()

    @pytest.mark.parametrize(
        ("dsl", "expected"),
        [("GF(4)", True), ("Z2 x Z2", True), ("Z2 x Z3", True), ("Z4", False), ("Z12", False)],
    )
    def test_regular(self, ring_of: RingFactory, dsl: str, expected: bool) -> None:
        assert is_regular(ring_of(dsl)) is expected

    def test_root_property(self, ring_of: RingFactory) -> None:
        # Boolean rings: x = x^2 for every x
        assert has_root_property(ring_of("Z2 x Z2"))
        # 2 is no proper power in Z4
        assert not has_root_property(ring_of("Z4"))

    def test_arithmetical(self, ring_of: RingFactory) -> None:
        assert is_arithmetical(ring_of("Z12"))
        # F2[x,y]/(x,y)^2: the ideals (x), (y), (x+y) are not distributive
        tables = next(r for r in load_corpus().rings if r.tables is not None)
        assert not is_arithmetical(build_ring(tables.spec()))


class TestSubrings:
    def test_prime_subring(self, ring_of: RingFactory) -> None:
        ring = ring_of("GF(4)")
        assert generated_subring(ring, []) == 0b11

    def test_unital_subrings_of_gf4(self, ring_of: RingFactory) -> None:
        ring = ring_of("GF(4)")
        assert unital_subrings(ring) == [0b11, 0b1111]

    def test_subring_tables(self, ring_of: RingFactory) -> None:
        ring = ring_of("Z2 x Z2")
        diagonal = [ring.parse_element("(0,0)"), ring.parse_element("(1,1)")]
        sub, embed = subring(ring, diagonal)
        assert sub.size == 2
        assert embed == tuple(sorted(diagonal))

    def test_not_closed(self, ring_of: RingFactory) -> None:
        ring = ring_of("Z4")
        with pytest.raises(NotASubring, match="zero and one"):
            subring(ring, [0, 2])
