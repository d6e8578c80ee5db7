"""Relative tools: relative."""

from __future__ import annotations

import json

from mcp.server.fastmcp import FastMCP

from hyideals.validation import ValidationError, parse_json_list
from hyideals.workbench import Workbench


def register_tools(mcp: FastMCP, bench: Workbench) -> None:
    @mcp.tool()
    def relative(dsl: str, ideal: str, y: str = "spec") -> str:
        """Relative verdicts, factors and greatest factor. Ideal is a JSON array of generators."""
        try:
            gens = parse_json_list(ideal, "ideal")
            return json.dumps(bench.relative(dsl, y, gens))
        except ValidationError as e:
            return json.dumps({"error": e.message})
