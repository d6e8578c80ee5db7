"""Finite commutative rings with identity: specs, construction and ring-level predicates."""

from __future__ import annotations

import itertools
import logging
import math
import random
from collections.abc import Iterable, Sequence
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field

from hyideals.bitset import mask_of
from hyideals.config import Config
from hyideals.validation import (
    AxiomViolation,
    BadSpec,
    NotASubring,
    ValidationError,
    validate_modulus,
    validate_ring_size,
)

logger = logging.getLogger(__name__)

# Rings up to this size get the full O(N^3) law audit; larger ones are sampled.
LAW_EXHAUSTIVE_MAX = 256


# -- Specs --


class _Spec(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class ZnSpec(_Spec):
    kind: Literal["zn"] = "zn"
    n: int


class QuotPolySpec(_Spec):
    """Z_n[x]/(f); coefficients of f are listed highest degree first."""

    kind: Literal["quotpoly"] = "quotpoly"
    n: int
    f: tuple[int, ...]


class ProductSpec(_Spec):
    kind: Literal["product"] = "product"
    factors: tuple[RingSpec, ...]


class TablesSpec(_Spec):
    kind: Literal["tables"] = "tables"
    size: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int = 0
    one: int = 1
    labels: tuple[str, ...] | None = None


RingSpec = Annotated[
    Union[ZnSpec, QuotPolySpec, ProductSpec, TablesSpec], Field(discriminator="kind")
]
ProductSpec.model_rebuild()


def spec_size(spec: RingSpec) -> int:
    if isinstance(spec, ZnSpec):
        return spec.n
    if isinstance(spec, QuotPolySpec):
        return spec.n ** max(len(spec.f) - 1, 0)
    if isinstance(spec, ProductSpec):
        return math.prod(spec_size(f) for f in spec.factors)
    return spec.size


def format_poly(coeffs: Sequence[int]) -> str:
    """Render a high-to-low coefficient vector as e.g. `x^2+x+1`."""
    degree = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        d = degree - i
        if d == 0:
            terms.append(str(c))
            continue
        power = "x" if d == 1 else f"x^{d}"
        terms.append(power if c == 1 else f"{c}{power}")
    return "+".join(terms) if terms else "0"


def describe_spec(spec: RingSpec) -> str:
    """Render a spec in ring DSL syntax (tables rings get a placeholder)."""
    if isinstance(spec, ZnSpec):
        return f"Z{spec.n}"
    if isinstance(spec, QuotPolySpec):
        return f"Z{spec.n}[x]/({format_poly(spec.f)})"
    if isinstance(spec, ProductSpec):
        return " x ".join(describe_spec(f) for f in spec.factors)
    return f"tables({spec.size})"


# -- Rings --


def _normalize_label(text: str) -> str:
    return "".join(text.split())


class FiniteRing:
    """An explicit finite commutative ring with identity on elements 0..N-1.

    Immutable after construction. `_memo` holds values derived from the ring
    (ideal lattice, spectrum) and is filled lazily by the other modules.
    """

    def __init__(
        self,
        spec: RingSpec,
        add_table: tuple[tuple[int, ...], ...],
        mul_table: tuple[tuple[int, ...], ...],
        zero: int,
        one: int,
        labels: tuple[str, ...],
        name: str | None = None,
    ) -> None:
        self.spec = spec
        self.size = len(add_table)
        self.zero = zero
        self.one = one
        self.name = name or describe_spec(spec)
        self._add = add_table
        self._mul = mul_table
        self._labels = labels
        self._neg = tuple(row.index(zero) for row in add_table)
        self._by_label = {_normalize_label(label): i for i, label in enumerate(labels)}
        self._memo: dict[str, object] = {}

    def __repr__(self) -> str:
        return f"FiniteRing({self.name!r}, size={self.size})"

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def power(self, a: int, n: int) -> int:
        result = self.one
        for _ in range(n):
            result = self._mul[result][a]
        return result

    def powers(self, a: int) -> list[int]:
        """Distinct powers a, a^2, ... up to the first repetition."""
        seen: set[int] = set()
        out: list[int] = []
        x = a
        while x not in seen:
            seen.add(x)
            out.append(x)
            x = self._mul[x][a]
        return out

    def label(self, a: int) -> str:
        return self._labels[a]

    def labels(self) -> tuple[str, ...]:
        return self._labels

    def parse_element(self, text: str) -> int:
        """Resolve an element from its label or its index."""
        key = _normalize_label(str(text))
        if key in self._by_label:
            return self._by_label[key]
        if key.isdigit() and int(key) < self.size:
            return int(key)
        raise ValidationError(f"Unknown element {text!r} in ring {self.name}")

    def tables(self) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
        return self._add, self._mul

    def units(self) -> list[int]:
        return [a for a in self.elements if self.one in self._mul[a]]

    def idempotents(self) -> list[int]:
        return [a for a in self.elements if self._mul[a][a] == a]

    def nilpotents(self) -> list[int]:
        return [a for a in self.elements if self.zero in self.powers(a)]

    def is_reduced(self) -> bool:
        return self.nilpotents() == [self.zero]

    def is_local(self) -> bool:
        """Non-units form an additive subgroup exactly when the ring is local."""
        units = set(self.units())
        non_units = [a for a in self.elements if a not in units]
        return all(self._add[a][b] not in units for a in non_units for b in non_units)


# -- Law audit --

LAWS = (
    "additive identity",
    "multiplicative identity",
    "additive inverse",
    "additive commutativity",
    "multiplicative commutativity",
    "additive associativity",
    "multiplicative associativity",
    "distributivity",
)


def _pair_violation(
    add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]], zero: int, one: int
) -> tuple[str, tuple[int, ...]] | None:
    n = len(add)
    for a in range(n):
        if add[a][zero] != a:
            return "additive identity", (a,)
        if mul[a][one] != a:
            return "multiplicative identity", (a,)
        if zero not in add[a]:
            return "additive inverse", (a,)
        for b in range(a + 1, n):
            if add[a][b] != add[b][a]:
                return "additive commutativity", (a, b)
            if mul[a][b] != mul[b][a]:
                return "multiplicative commutativity", (a, b)
    return None


def _triple_violation(
    add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]], triples: Iterable[tuple[int, ...]]
) -> tuple[str, tuple[int, ...]] | None:
    for a, b, c in triples:
        if add[add[a][b]][c] != add[a][add[b][c]]:
            return "additive associativity", (a, b, c)
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            return "multiplicative associativity", (a, b, c)
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            return "distributivity", (a, b, c)
    return None


def ring_law_violation(
    ring: FiniteRing, *, sample_size: int = 100_000, seed: int = 0
) -> tuple[str, tuple[int, ...]] | None:
    """Return the first failing (law, witness) or None.

    Triples are exhaustive up to LAW_EXHAUSTIVE_MAX elements, otherwise a
    seeded sample of `sample_size` triples.
    """
    add, mul = ring.tables()
    found = _pair_violation(add, mul, ring.zero, ring.one)
    if found:
        return found
    n = ring.size
    if n <= LAW_EXHAUSTIVE_MAX:
        triples: Iterable[tuple[int, ...]] = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(f"laws:{seed}:{ring.name}")
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(sample_size)
        )
    return _triple_violation(add, mul, triples)


# -- Construction --


def _zn_tables(n: int) -> tuple[tuple, tuple]:
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
    return add, mul


def _build_zn(spec: ZnSpec, config: Config) -> FiniteRing:
    validate_modulus(spec.n)
    validate_ring_size(spec.n, config.max_ring_size, "structured")
    add, mul = _zn_tables(spec.n)
    return FiniteRing(spec, add, mul, 0, 1, tuple(str(a) for a in range(spec.n)))


def _polymul_mod(
    p: tuple[int, ...], q: tuple[int, ...], f_low: Sequence[int], n: int
) -> tuple[int, ...]:
    # p, q high-to-low of length d; f_low monic, low-to-high of length d+1
    d = len(p)
    a = p[::-1]
    b = q[::-1]
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k] % n
        if c:
            for i in range(d + 1):
                prod[k - d + i] -= c * f_low[i]
    return tuple(c % n for c in reversed(prod[:d]))


def _build_quotpoly(spec: QuotPolySpec, config: Config) -> FiniteRing:
    n = spec.n
    validate_modulus(n)
    f = tuple(c % n for c in spec.f)
    if len(f) < 2:
        raise BadSpec(f"Modulus polynomial must have degree at least 1, got {list(spec.f)}")
    if f[0] != 1:
        raise BadSpec(f"Modulus polynomial {format_poly(f)} is not monic over Z{n}")
    d = len(f) - 1
    validate_ring_size(n**d, config.max_ring_size, "structured")
    vectors = list(itertools.product(range(n), repeat=d))
    index = {v: i for i, v in enumerate(vectors)}
    f_low = f[::-1]
    add = tuple(
        tuple(index[tuple((x + y) % n for x, y in zip(p, q))] for q in vectors) for p in vectors
    )
    mul = tuple(tuple(index[_polymul_mod(p, q, f_low, n)] for q in vectors) for p in vectors)
    labels = tuple(format_poly(v) for v in vectors)
    return FiniteRing(spec.model_copy(update={"f": f}), add, mul, 0, 1, labels)


def _build_product(spec: ProductSpec, config: Config) -> FiniteRing:
    if not spec.factors:
        raise BadSpec("Product needs at least one factor")
    validate_ring_size(spec_size(spec), config.max_ring_size, "structured")
    parts = [build_ring(factor, config) for factor in spec.factors]
    tuples = list(itertools.product(*(p.elements for p in parts)))
    index = {t: i for i, t in enumerate(tuples)}

    def combine(op: str, s: tuple[int, ...], t: tuple[int, ...]) -> int:
        return index[tuple(getattr(p, op)(x, y) for p, x, y in zip(parts, s, t))]

    add = tuple(tuple(combine("add", s, t) for t in tuples) for s in tuples)
    mul = tuple(tuple(combine("mul", s, t) for t in tuples) for s in tuples)
    zero = index[tuple(p.zero for p in parts)]
    one = index[tuple(p.one for p in parts)]
    labels = tuple(
        "(" + ",".join(p.label(x) for p, x in zip(parts, t)) + ")" for t in tuples
    )
    return FiniteRing(spec, add, mul, zero, one, labels)


def _check_table_shape(spec: TablesSpec) -> None:
    n = spec.size
    if n < 2:
        raise BadSpec(f"Table ring needs at least 2 elements, got {n}")
    for name in ("add", "mul"):
        table = getattr(spec, name)
        if len(table) != n or any(len(row) != n for row in table):
            raise BadSpec(f"{name} table must be {n}x{n}")
        if any(not (0 <= x < n) for row in table for x in row):
            raise BadSpec(f"{name} table has entries outside 0..{n - 1}")
    if not (0 <= spec.zero < n and 0 <= spec.one < n):
        raise BadSpec("zero and one must be element indices")
    if spec.labels is not None:
        if len(spec.labels) != n:
            raise BadSpec(f"Expected {n} labels, got {len(spec.labels)}")
        if len({_normalize_label(label) for label in spec.labels}) != n:
            raise BadSpec("Element labels must be unique")


def ring_from_tables(spec: TablesSpec, name: str | None = None) -> FiniteRing:
    """Validate a tables spec against every ring law and build the ring (no size cap)."""
    _check_table_shape(spec)
    if spec.zero == spec.one:
        raise AxiomViolation("zero != one", (spec.zero,))
    found = _pair_violation(spec.add, spec.mul, spec.zero, spec.one)
    if found is None:
        found = _triple_violation(
            spec.add, spec.mul, itertools.product(range(spec.size), repeat=3)
        )
    if found:
        raise AxiomViolation(*found)
    labels = spec.labels or tuple(str(a) for a in range(spec.size))
    return FiniteRing(spec, spec.add, spec.mul, spec.zero, spec.one, labels, name)


def build_ring(
    spec: RingSpec, config: Config | None = None, name: str | None = None
) -> FiniteRing:
    """Build a ring from its spec; element order is deterministic."""
    config = config or Config()
    if isinstance(spec, ZnSpec):
        ring = _build_zn(spec, config)
    elif isinstance(spec, QuotPolySpec):
        ring = _build_quotpoly(spec, config)
    elif isinstance(spec, ProductSpec):
        ring = _build_product(spec, config)
    else:
        validate_ring_size(spec.size, config.max_table_size, "tables")
        return ring_from_tables(spec, name)
    # structured rings: O(N^2) spot check of the identity and commutativity laws
    found = _pair_violation(*ring.tables(), ring.zero, ring.one)
    if found:
        raise AxiomViolation(*found)
    if name:
        ring.name = name
    logger.debug("built %s with %d elements", ring.name, ring.size)
    return ring


# -- Predicates --


def is_regular(ring: FiniteRing) -> bool:
    """von Neumann regularity: every a has x with a*x*a = a."""
    return all(
        any(ring.mul(ring.mul(a, x), a) == a for x in ring.elements) for a in ring.elements
    )


def proper_powers(ring: FiniteRing, y: int) -> set[int]:
    """The set {y^n : n >= 2}."""
    seq = ring.powers(y)
    return set(seq[1:]) | {ring.mul(seq[-1], y)}


def has_root_property(ring: FiniteRing) -> bool:
    """Every x equals y^n for some y and n >= 2."""
    reached: set[int] = set()
    for y in ring.elements:
        reached |= proper_powers(ring, y)
    return len(reached) == ring.size


def is_arithmetical(ring: FiniteRing, config: Config | None = None) -> bool:
    """Distributivity I∩(J+K) = (I∩J)+(I∩K) over all ideal triples."""
    from hyideals.ideals import all_ideals, sum_masks

    lattice = all_ideals(ring, config)
    masks = [ideal.members for ideal in lattice]
    for i in masks:
        for j in masks:
            for k in masks:
                if i & sum_masks(ring, j, k) != sum_masks(ring, i & j, i & k):
                    return False
    return True


# -- Subrings --


def generated_subring(ring: FiniteRing, gens: Iterable[int]) -> int:
    """Member mask of the unital subring generated by `gens`."""
    members = {ring.zero, ring.one, *gens}
    while True:
        current = list(members)
        grown = {ring.add(a, b) for a in current for b in current}
        grown |= {ring.mul(a, b) for a in current for b in current}
        grown |= {ring.neg(a) for a in current}
        if grown <= members:
            return mask_of(members)
        members |= grown


def unital_subrings(ring: FiniteRing) -> list[int]:
    """Subrings generated by 1 and a single element, deduplicated and ordered."""
    found = {generated_subring(ring, [a]) for a in ring.elements}
    return sorted(found, key=lambda m: (m.bit_count(), m))


def subring(ring: FiniteRing, members: Iterable[int]) -> tuple[FiniteRing, tuple[int, ...]]:
    """Build a subset closed under +, -, * containing 0 and 1 as a tables ring.

    Returns the subring and its embedding (subring index -> ring index).
    """
    embed = tuple(sorted(set(members)))
    if any(not (0 <= a < ring.size) for a in embed):
        raise NotASubring("Subring elements must be element indices of the ring")
    key = f"subring:{mask_of(embed)}"
    cached = ring._memo.get(key)
    if cached is not None:
        return cached  # type: ignore[return-value]
    member_set = set(embed)
    if ring.zero not in member_set or ring.one not in member_set:
        raise NotASubring(f"Subset {list(embed)} must contain zero and one")
    for a in embed:
        if ring.neg(a) not in member_set:
            raise NotASubring(f"Subset not closed under negation at {a}")
        for b in embed:
            if ring.add(a, b) not in member_set or ring.mul(a, b) not in member_set:
                raise NotASubring(f"Subset not closed under + and * at ({a}, {b})")
    local = {a: i for i, a in enumerate(embed)}
    spec = TablesSpec(
        size=len(embed),
        add=tuple(tuple(local[ring.add(a, b)] for b in embed) for a in embed),
        mul=tuple(tuple(local[ring.mul(a, b)] for b in embed) for a in embed),
        zero=local[ring.zero],
        one=local[ring.one],
        labels=tuple(ring.label(a) for a in embed),
    )
    name = f"{ring.name}|{{{','.join(ring.label(a) for a in embed)}}}"
    built = ring_from_tables(spec, name), embed
    ring._memo[key] = built
    return built
