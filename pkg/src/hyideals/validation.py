"""Error types and input validation for hyideals."""

from __future__ import annotations

import json
import re
from collections.abc import Container

# -- Limits --
HARD_SIZE_LIMIT = 4096
MIN_MODULUS = 2

# -- Allowed values --
VALID_FORMATS = {"json", "table"}
NAMED_SELECTORS = {"spec", "max", "min"}

_INDICES_RE = re.compile(r"^indices:\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$")


class ValidationError(Exception):
    """Raised when input validation fails."""

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(message)


class BadSpec(ValidationError):
    """A ring spec is malformed (modulus, monic polynomial, table shape)."""


class AxiomViolation(ValidationError):
    """A table ring fails a ring law."""

    def __init__(self, law: str, witness: tuple[int, ...]) -> None:
        self.law = law
        self.witness = witness
        super().__init__(f"Ring law {law!r} fails at {witness}")


class CapExceeded(ValidationError):
    pass


class RingMismatch(ValidationError):
    pass


class NotSemiprime(ValidationError):
    pass


class SNotSubsetY(ValidationError):
    pass


class NotASubring(ValidationError):
    pass


class NonPrimeMaximalStrongIdeal(ValidationError):
    pass


class PremiseFailed(ValidationError):
    pass


class ParseError(ValidationError):
    """DSL text could not be parsed; `position` is a 0-based character offset."""

    def __init__(self, message: str, position: int) -> None:
        self.position = position
        super().__init__(f"{message} at position {position}")


class CorpusError(ValidationError):
    pass


class UnknownCheckId(ValidationError):
    pass


class ConsistencyError(RuntimeError):
    """Two computations that must agree did not."""


def validate_modulus(n: int) -> None:
    """Reject moduli below MIN_MODULUS."""
    if n < MIN_MODULUS:
        raise BadSpec(f"Modulus must be at least {MIN_MODULUS}, got {n}")


def validate_ring_size(size: int, cap: int, kind: str) -> None:
    """Reject rings above the configured cap or the hard limit."""
    if size > HARD_SIZE_LIMIT:
        raise CapExceeded(f"{kind} ring has {size} elements, hard limit is {HARD_SIZE_LIMIT}")
    if size > cap:
        raise CapExceeded(f"{kind} ring has {size} elements, cap is {cap}")


def validate_format(fmt: str) -> None:
    """Validate an output format."""
    if fmt not in VALID_FORMATS:
        raise ValidationError(
            f"Invalid format: {fmt!r}. Must be one of: {', '.join(sorted(VALID_FORMATS))}"
        )


def parse_indices_selector(selector: str) -> tuple[int, ...] | None:
    """Return the index tuple of an `indices:[...]` selector, or None for other forms."""
    match = _INDICES_RE.match(selector.strip())
    if not match:
        return None
    body = match.group(1)
    if not body:
        return ()
    return tuple(int(part) for part in body.split(","))


def validate_selector(selector: str) -> None:
    """Validate a subspace selector string."""
    if selector in NAMED_SELECTORS or selector == "all-subsets":
        return
    if parse_indices_selector(selector) is None:
        raise ValidationError(
            f"Invalid subspace selector: {selector!r}. Must be one of: "
            "spec, max, min, all-subsets, indices:[i,j,...]"
        )


def validate_check_ids(ids: list[str], known: Container[str]) -> None:
    """Raise UnknownCheckId naming every id not in known."""
    unknown = [i for i in ids if i not in known]
    if unknown:
        raise UnknownCheckId(f"Unknown check id(s): {', '.join(unknown)}")


def parse_json_list(text: str, what: str) -> list[str]:
    """Decode a JSON array of strings or integers, as tool arguments arrive."""
    try:
        value = json.loads(text)
    except (json.JSONDecodeError, TypeError):
        raise ValidationError(f"Invalid {what} JSON: {text!r}")
    if not isinstance(value, list) or not all(isinstance(v, (str, int)) for v in value):
        raise ValidationError(f"{what} must be a JSON array of strings")
    return [str(v) for v in value]
