"""Helpers shared by the check modules."""

from __future__ import annotations

from typing import Any

from hyideals.ideals import Ideal, IdealLattice

# plain first, then strong
VARIANTS = (False, True)


def kind(strong: bool) -> str:
    return "strong" if strong else "plain"


def shown(strong: bool | None = None, **ideals: Ideal) -> dict[str, Any]:
    """Witness payload: each ideal as its member list, plus the variant when given."""
    out: dict[str, Any] = {name: ideal.to_json() for name, ideal in ideals.items()}
    if strong is not None:
        out["variant"] = kind(strong)
    return out


def meet(lattice: IdealLattice, a: Ideal, b: Ideal) -> Ideal:
    return lattice.find(a.members & b.members)
