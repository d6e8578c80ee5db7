"""Ring tools: ring_show, list_ideals, spectrum."""

from __future__ import annotations

import json

from mcp.server.fastmcp import FastMCP

from hyideals.validation import ValidationError
from hyideals.workbench import Workbench


def register_tools(mcp: FastMCP, bench: Workbench) -> None:
    @mcp.tool()
    def ring_show(dsl: str) -> str:
        """Elements, units, idempotents and ring predicates of a DSL ring such as 'Z12'."""
        try:
            return json.dumps(bench.ring_show(dsl))
        except ValidationError as e:
            return json.dumps({"error": e.message})

    @mcp.tool()
    def list_ideals(dsl: str) -> str:
        """Every ideal of the ring with its member list."""
        try:
            return json.dumps(bench.ideals(dsl))
        except ValidationError as e:
            return json.dumps({"error": e.message})

    @mcp.tool()
    def spectrum(dsl: str) -> str:
        """Prime, maximal, minimal, Bourbaki and affiliated primes."""
        try:
            return json.dumps(bench.spectrum(dsl))
        except ValidationError as e:
            return json.dumps({"error": e.message})
