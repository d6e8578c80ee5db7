"""Verification tools: run_check, verify_corpus, separation_search."""

from __future__ import annotations

import json

from mcp.server.fastmcp import FastMCP

from hyideals.corpus import parse_corpus
from hyideals.validation import ValidationError, parse_json_list
from hyideals.workbench import Workbench


def register_tools(mcp: FastMCP, bench: Workbench) -> None:
    @mcp.tool()
    def run_check(check_id: str, dsl: str, y: str = "spec") -> str:
        """Run one theorem check on one ring; 'all-subsets' runs it on every subspace."""
        try:
            return json.dumps(bench.run_one(check_id, dsl, y))
        except ValidationError as e:
            return json.dumps({"error": e.message})

    @mcp.tool()
    def verify_corpus(corpus: str = "default", check_ids: str = "[]") -> str:
        """Run the checks over a corpus: 'default' or corpus JSON text."""
        try:
            ids = parse_json_list(check_ids, "check_ids")
            source = corpus if corpus == "default" else parse_corpus(corpus)
            return bench.verify(source, ids or None).to_json()
        except ValidationError as e:
            return json.dumps({"error": e.message})

    @mcp.tool()
    def separation_search(corpus: str = "default") -> str:
        """Scan a corpus for H_Y-ideals that are not strong H_Y-ideals."""
        try:
            source = corpus if corpus == "default" else parse_corpus(corpus)
            return bench.separation(source).model_dump_json()
        except ValidationError as e:
            return json.dumps({"error": e.message})
