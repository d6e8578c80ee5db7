"""H_Y tools: hy_check, hy_closure, fixed."""

from __future__ import annotations

import json

from mcp.server.fastmcp import FastMCP

from hyideals.validation import ValidationError, parse_json_list
from hyideals.workbench import Workbench


def register_tools(mcp: FastMCP, bench: Workbench) -> None:
    @mcp.tool()
    def hy_check(dsl: str, ideal: str, y: str = "spec") -> str:
        """Decide H_Y and strong H_Y for an ideal. Ideal is a JSON array of generators."""
        try:
            gens = parse_json_list(ideal, "ideal")
            return json.dumps(bench.hy_check(dsl, y, gens))
        except ValidationError as e:
            return json.dumps({"error": e.message})

    @mcp.tool()
    def hy_closure(dsl: str, ideal: str, y: str = "spec") -> str:
        """The least H_Y-ideal and strong H_Y-ideal containing the ideal."""
        try:
            gens = parse_json_list(ideal, "ideal")
            return json.dumps(bench.hy_closure(dsl, y, gens))
        except ValidationError as e:
            return json.dumps({"error": e.message})

    @mcp.tool()
    def fixed(dsl: str, ideal: str, y: str = "spec", wrt: str = "") -> str:
        """Fixed or free over Y; wrt optionally names a subset of Y as indices:[...]."""
        try:
            gens = parse_json_list(ideal, "ideal")
            return json.dumps(bench.fixed(dsl, y, gens, wrt or None))
        except ValidationError as e:
            return json.dumps({"error": e.message})
