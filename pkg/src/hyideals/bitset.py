"""Integer bitsets over small index universes."""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    return list(iter_bits(mask))


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def full_mask(n: int) -> int:
    return (1 << n) - 1


def subsets(mask: int) -> Iterator[int]:
    """Yield every submask of `mask`, starting with the empty set."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask
