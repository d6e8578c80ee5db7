"""Check registry assembly and the static manifest of check ids."""

from __future__ import annotations

from hyideals.checks import factors, fixed, foundations, hyj, relative
from hyideals.verifier import Registry

MANIFEST: tuple[str, ...] = (
    # foundations
    "ring.laws",
    "ideals.lattice-oracle",
    "ideals.radical-laws",
    "spectrum.prime-families",
    "spectrum.bourbaki",
    "topology.closure-laws",
    "hy.equivalents",
    "strong.equivalents",
    "hy.lattice-laws",
    "oracle.strong",
    "oracle.closure",
    "oracle.relative",
    # fixed and free ideals
    "fixed.filter-meet-is-hull",
    "fixed.hilbert-is-fixed",
    "fixed.inverse-image-fixedness",
    "fixed.inverse-image-whole-ring",
    "fixed.maximal-are-points",
    "fixed.compactness-equivalents",
    "fixed.bourbaki-in-minimal-subspace",
    "fixed.compactification",
    "fixed.wrt-subset",
    "fixed.maximal-wrt-subset",
    "fixed.subring-restriction",
    # H_{YJ}-ideals
    "hyj.strong-implies-plain",
    "hyj.self-factor",
    "hyj.hy-is-hyj",
    "hyj.subideal-of-hy",
    "hyj.equivalents",
    "hyj.paired-meet",
    "hyj.factor-shrink",
    "hyj.meet-closed",
    "hyj.transitive",
    "hyj.radical-pair",
    "hyj.meet-with-factor",
    "hyj.sum-with-factor",
    "hyj.inside-hy-factor",
    "hyj.meet-hy-factor",
    "hyj.symmetric-meet",
    "hyj.product-to-meet",
    "hyj.least-containing-meet",
    "hyj.same-closure-up",
    "hyj.between-closure",
    "hyj.radical",
    "hyj.prime-factor-multiplicative",
    "hyj.non-hy-subideal",
    "hyj.minimal-prime-transfer",
    "hyj.prime-criterion",
    "hyj.prime-meet-split",
    "hyj.incomparable-primes",
    "hyj.subspace-comparison",
    # relative ideals
    "relative.strong-implies-plain",
    "relative.hy-is-relative",
    "relative.minimal-prime-witness",
    "relative.strict-superset",
    "relative.same-closure-up",
    "relative.between-closure",
    "relative.prime-meet-split",
    "relative.principal-witness",
    "relative.via-colon",
    "relative.principal-root",
    "relative.semiprime-representation",
    "relative.regularity",
    # factors
    "factor.maximal-are-primes",
    "factor.maximal-proper-subideals",
    "factor.maximal-contains-base",
    "factor.minimal-plus-base",
    "factor.greatest-formula",
    "factor.minimal-prime-meet",
    "factor.greatest-exists",
    "factor.arithmetical-greatest",
    "factor.minimal-characterization",
)

# Short result labels accepted wherever a check id is; `C3.3(a)` and `C3.3a` both resolve.
RESULT_IDS: dict[str, str] = {
    "P3.2": "fixed.filter-meet-is-hull",
    "C3.3a": "fixed.hilbert-is-fixed",
    "C3.3b": "fixed.inverse-image-fixedness",
    "C3.3c": "fixed.inverse-image-whole-ring",
    "C3.4": "fixed.maximal-are-points",
    "T3.5": "fixed.compactness-equivalents",
    "C3.6": "fixed.bourbaki-in-minimal-subspace",
    "T3.7": "fixed.compactification",
    "T3.9": "fixed.wrt-subset",
    "C3.10": "fixed.maximal-wrt-subset",
    "P3.11": "fixed.subring-restriction",
    "P4.2a": "hyj.strong-implies-plain",
    "P4.2b": "relative.strong-implies-plain",
    "P4.2c": "hyj.self-factor",
    "P4.2d": "hyj.hy-is-hyj",
    "P4.2e": "relative.hy-is-relative",
    "P4.2f": "hyj.subideal-of-hy",
    "T4.3a": "hyj.minimal-prime-transfer",
    "T4.3b": "hyj.prime-criterion",
    "T4.3c": "relative.minimal-prime-witness",
    "T4.4": "hyj.equivalents",
    "P4.5a": "hyj.paired-meet",
    "P4.5b": "hyj.factor-shrink",
    "P4.5c": "hyj.meet-closed",
    "P4.5d": "hyj.transitive",
    "P4.5e": "hyj.radical-pair",
    "P4.5f": "hyj.meet-with-factor",
    "P4.5g": "hyj.sum-with-factor",
    "P4.5h": "hyj.inside-hy-factor",
    "P4.5i": "hyj.meet-hy-factor",
    "P4.5j": "hyj.symmetric-meet",
    "P4.5k": "hyj.least-containing-meet",
    "P4.5l": "hyj.same-closure-up",
    "P4.5m": "hyj.between-closure",
    "P4.5n": "hyj.radical",
    "P4.5o": "hyj.product-to-meet",
    "P4.5p": "hyj.prime-factor-multiplicative",
    "P4.5q": "hyj.non-hy-subideal",
    "P4.5r": "hyj.prime-meet-split",
    "P4.5s": "hyj.incomparable-primes",
    "P4.7a": "relative.strict-superset",
    "P4.7b": "relative.same-closure-up",
    "P4.7c": "relative.between-closure",
    "P4.7d": "relative.prime-meet-split",
    "P4.7e": "relative.principal-witness",
    "P4.7f": "relative.via-colon",
    "P4.7g": "relative.principal-root",
    "P4.8a": "factor.maximal-are-primes",
    "P4.8b": "factor.maximal-proper-subideals",
    "P4.8c": "factor.maximal-contains-base",
    "P4.8d": "factor.minimal-plus-base",
    "P4.8e": "factor.greatest-formula",
    "P4.8f": "factor.minimal-prime-meet",
    "P4.8g": "factor.greatest-exists",
    "P4.8h": "factor.arithmetical-greatest",
    "P4.8i": "factor.minimal-characterization",
    "C-semiprime": "relative.semiprime-representation",
    "T-compare": "hyj.subspace-comparison",
    "T-regularity": "relative.regularity",
}

# Library-level checks with no short label.
FOUNDATION_IDS = MANIFEST[:12]


def build_registry() -> Registry:
    registry = Registry()
    for module in (foundations, fixed, hyj, relative, factors):
        module.register_checks(registry)
    for short, check_id in RESULT_IDS.items():
        registry.alias(short, check_id)
    return registry
