"""Ring DSL: `Z12`, `GF(4)`, `GF(2^3)`, `Z2[x]/(x^2+x+1)` and products joined by `x`."""

from __future__ import annotations

import itertools
import logging
from functools import cache
from tokenize import TokenError

from sympy import Poly, Symbol, SympifyError, factorint
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import PolynomialError

from hyideals.ring import ProductSpec, QuotPolySpec, RingSpec, ZnSpec
from hyideals.validation import (
    HARD_SIZE_LIMIT,
    BadSpec,
    ParseError,
    validate_modulus,
    validate_ring_size,
)

logger = logging.getLogger(__name__)

X = Symbol("x")
_TRANSFORMS = (*standard_transformations, convert_xor, implicit_multiplication_application)


@cache
def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k over F_p, tails in lexicographic order."""
    for tail in itertools.product(range(p), repeat=k):
        coeffs = (1, *tail)
        if Poly(list(coeffs), X, modulus=p).is_irreducible:
            return coeffs
    raise BadSpec(f"No irreducible polynomial of degree {k} over F_{p}")


def galois_field(q: int) -> RingSpec:
    """GF(q) for a prime power q; GF(p) is Z_p."""
    validate_ring_size(q, HARD_SIZE_LIMIT, "GF")
    primes = factorint(q) if q > 1 else {}
    if len(primes) != 1:
        raise BadSpec(f"GF({q}): {q} is not a prime power")
    [(p, k)] = primes.items()
    if k == 1:
        return ZnSpec(n=p)
    return QuotPolySpec(n=p, f=first_irreducible(p, k))


def parse_poly(text: str, n: int, position: int = 0) -> tuple[int, ...]:
    """Coefficients of a polynomial in x over Z_n, highest degree first."""
    try:
        expr = parse_expr(text, local_dict={"x": X}, transformations=_TRANSFORMS)
    except (SyntaxError, TokenError, SympifyError, TypeError, ValueError) as e:
        raise ParseError(f"Cannot read polynomial {text!r} ({e.__class__.__name__})", position)
    stray = expr.free_symbols - {X}
    if stray:
        names = ", ".join(sorted(str(s) for s in stray))
        raise ParseError(f"Polynomial {text!r} uses unknown symbol(s) {names}", position)
    try:
        coeffs = Poly(expr, X).all_coeffs()
    except PolynomialError:
        raise ParseError(f"{text!r} is not a polynomial in x", position)
    if not all(c.is_Integer for c in coeffs):
        raise ParseError(f"Polynomial {text!r} has non-integer coefficients", position)
    reduced = [int(c) % n for c in coeffs]
    while len(reduced) > 1 and reduced[0] == 0:
        reduced.pop(0)
    return tuple(reduced)


class _Parser:
    """Recursive descent over the DSL text; positions are 0-based offsets."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos : self.pos + 1]

    def _expect(self, literal: str) -> None:
        for ch in literal:
            if self._peek() != ch:
                found = self._peek() or "end of input"
                raise ParseError(f"Expected {ch!r}, found {found!r}", self.pos)
            self.pos += 1

    def _int(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("Expected an integer", start)
        return int(self.text[start : self.pos])

    def _until_close(self) -> tuple[str, int]:
        """Text up to the matching ')'; the ')' is consumed."""
        start = self.pos
        depth = 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    body = self.text[start : self.pos]
                    self.pos += 1
                    return body, start
                depth -= 1
            self.pos += 1
        raise ParseError("Unclosed '('", start)

    def ring(self) -> RingSpec:
        factors = [self.term()]
        while self._peek() == "x":
            self.pos += 1
            factors.append(self.term())
        if self._peek():
            raise ParseError(f"Unexpected {self._peek()!r}", self.pos)
        if len(factors) == 1:
            return factors[0]
        return ProductSpec(factors=tuple(factors))

    def term(self) -> RingSpec:
        head = self._peek()
        if head == "G":
            return self._galois()
        if head != "Z":
            found = head or "end of input"
            raise ParseError(f"Expected 'Z' or 'GF(', found {found!r}", self.pos)
        self.pos += 1
        n = self._int()
        validate_modulus(n)
        if self._peek() != "[":
            return ZnSpec(n=n)
        self._expect("[x]/(")
        body, start = self._until_close()
        if not body.strip():
            raise ParseError("Empty polynomial", start)
        return QuotPolySpec(n=n, f=parse_poly(body, n, start))

    def _galois(self) -> RingSpec:
        self._expect("GF(")
        q = self._int()
        if self._peek() == "^":
            self.pos += 1
            q = q ** self._int()
        self._expect(")")
        return galois_field(q)


def parse_ring_dsl(text: str) -> RingSpec:
    """Parse ring DSL text into a spec; whitespace between tokens is ignored."""
    spec = _Parser(text).ring()
    logger.debug("parsed %r as %s", text, spec)
    return spec
