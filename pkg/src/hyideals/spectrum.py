"""Prime spectrum: primes, maximal and minimal primes, Bourbaki and affiliated primes."""

from __future__ import annotations

from hyideals.config import Config
from hyideals.ideals import (
    Ideal,
    all_ideals,
    annihilator,
    colon,
    intersect_all,
    is_semiprime,
    maxl,
    minl,
    order_key,
    radical,
)
from hyideals.ring import FiniteRing
from hyideals.validation import ConsistencyError, NotSemiprime

# A prime ideal is an Ideal that passed is_prime; the exhaustive check is the certificate.
PrimeIdeal = Ideal


def is_prime(ideal: Ideal) -> bool:
    if not ideal.is_proper:
        return False
    ring = ideal.ring
    outside = [a for a in ring.elements if a not in ideal]
    return all(ring.mul(a, b) not in ideal for a in outside for b in outside)


def spec(ring: FiniteRing, config: Config | None = None) -> tuple[PrimeIdeal, ...]:
    cached = ring._memo.get("spec")
    if cached is None:
        cached = tuple(p for p in all_ideals(ring, config) if is_prime(p))
        ring._memo["spec"] = cached
    return cached  # type: ignore[return-value]


def max_ideals(ring: FiniteRing) -> list[PrimeIdeal]:
    return maxl(spec(ring))


def min_primes(ring: FiniteRing) -> list[PrimeIdeal]:
    return minl(spec(ring))


def min_over(ideal: Ideal) -> list[PrimeIdeal]:
    """Min(I): primes minimal over I."""
    return minl(p for p in spec(ideal.ring) if ideal <= p)


def bourbaki(ideal: Ideal) -> list[PrimeIdeal]:
    """B(I): primes of the form (I:x)."""
    ring = ideal.ring
    colons = {colon(ideal, x).members for x in ring.elements}
    return [p for p in spec(ring) if p.members in colons]


def is_fixed_place(ideal: Ideal) -> bool:
    if not is_semiprime(ideal):
        raise NotSemiprime(f"{ideal.label()} is not semi-prime; fixed-place is undefined")
    return intersect_all(ideal.ring, bourbaki(ideal)) == ideal


def affiliated_primes(ring: FiniteRing) -> list[PrimeIdeal]:
    """Maximal annihilators of nonzero elements; each one is checked to be prime."""
    lattice = all_ideals(ring)
    annihilators = [
        lattice.find(annihilator(ring, a).members) for a in ring.elements if a != ring.zero
    ]
    found = sorted(maxl(annihilators), key=order_key)
    for ann in found:
        if not is_prime(ann):
            raise ConsistencyError(f"Maximal annihilator {ann.label()} is not prime")
    return found


def jacobson_radical(ring: FiniteRing) -> Ideal:
    return intersect_all(ring, max_ideals(ring))


def nilradical(ring: FiniteRing) -> Ideal:
    return radical(all_ideals(ring).zero)
