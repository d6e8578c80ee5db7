"""Tests for the MCP tool functions and server assembly."""

from __future__ import annotations

import asyncio
import json
from collections.abc import Callable
from typing import Any

import pytest

from hyideals.config import Config
from hyideals.server import create_server
from hyideals.tools import calculus, relative, rings, verify
from hyideals.workbench import Workbench

ToolFn = Callable[..., str]


class _Recorder:
    """Stands in for FastMCP: keeps each registered tool function by name."""

    def __init__(self) -> None:
        self.tools: dict[str, ToolFn] = {}

    def tool(self) -> Callable[[ToolFn], ToolFn]:
        def decorator(fn: ToolFn) -> ToolFn:
            self.tools[fn.__name__] = fn
            return fn

        return decorator


@pytest.fixture
def tools(bench: Workbench) -> dict[str, ToolFn]:
    recorder = _Recorder()
    for module in (rings, calculus, relative, verify):
        module.register_tools(recorder, bench)  # type: ignore[arg-type]
    return recorder.tools


def _call(tools: dict[str, ToolFn], name: str, **kwargs: Any) -> Any:
    return json.loads(tools[name](**kwargs))


def test_server_registers_every_tool() -> None:
    server = create_server(Config())
    names = {tool.name for tool in asyncio.run(server.list_tools())}
    assert names == {
        "ring_show",
        "list_ideals",
        "spectrum",
        "hy_check",
        "hy_closure",
        "fixed",
        "relative",
        "run_check",
        "verify_corpus",
        "separation_search",
    }


class TestRingTools:
    def test_ring_show(self, tools: dict[str, ToolFn]) -> None:
        assert _call(tools, "ring_show", dsl="GF(4)")["size"] == 4

    def test_list_ideals(self, tools: dict[str, ToolFn]) -> None:
        assert _call(tools, "list_ideals", dsl="Z12")["count"] == 6

    def test_spectrum(self, tools: dict[str, ToolFn]) -> None:
        assert _call(tools, "spectrum", dsl="Z30")["spec"] == ["(5)", "(3)", "(2)"]

    def test_error_payload(self, tools: dict[str, ToolFn]) -> None:
        data = _call(tools, "ring_show", dsl="GF(6)")
        assert "not a prime power" in data["error"]


class TestQueryTools:
    def test_hy_check(self, tools: dict[str, ToolFn]) -> None:
        data = _call(tools, "hy_check", dsl="Z12", ideal='["6"]')
        assert data["hy"] is True
        assert data["Y"] == "spec"

    def test_integer_generators(self, tools: dict[str, ToolFn]) -> None:
        data = _call(tools, "hy_closure", dsl="Z12", ideal="[4]")
        assert data["closure"]["label"] == "(2)"

    def test_fixed_with_subset(self, tools: dict[str, ToolFn]) -> None:
        data = _call(tools, "fixed", dsl="Z12", ideal="[4]", wrt="indices:[1]")
        assert data["fixed_wrt"] is True

    def test_relative(self, tools: dict[str, ToolFn]) -> None:
        data = _call(tools, "relative", dsl="Z12", ideal="[4]")
        assert data["relative"] is False
        assert data["greatest_factor"] == {"label": "(4)", "trivial": True}

    def test_malformed_ideal(self, tools: dict[str, ToolFn]) -> None:
        data = _call(tools, "hy_check", dsl="Z12", ideal="4,6")
        assert data["error"].startswith("Invalid ideal JSON")

    def test_bad_selector(self, tools: dict[str, ToolFn]) -> None:
        data = _call(tools, "hy_check", dsl="Z12", ideal="[4]", y="nowhere")
        assert "Invalid subspace selector" in data["error"]


class TestVerifyTools:
    def test_run_check(self, tools: dict[str, ToolFn]) -> None:
        reports = _call(tools, "run_check", check_id="fixed.wrt-subset", dsl="Z12")
        assert [r["verdict"] for r in reports] == ["pass"]

    def test_unknown_check(self, tools: dict[str, ToolFn]) -> None:
        data = _call(tools, "run_check", check_id="nope", dsl="Z12")
        assert "Unknown check id" in data["error"]

    def test_verify_inline_corpus(self, tools: dict[str, ToolFn]) -> None:
        corpus = json.dumps({"rings": [{"name": "Z4", "dsl": "Z4"}], "subspaces": ["spec"]})
        data = _call(tools, "verify_corpus", corpus=corpus, check_ids='["hy.equivalents"]')
        assert data["summary"]["pass"] == 1
        assert data["summary"]["fail"] == 0

    def test_verify_bad_corpus(self, tools: dict[str, ToolFn]) -> None:
        data = _call(tools, "verify_corpus", corpus="{not json")
        assert "not valid JSON" in data["error"]

    def test_separation_search(self, tools: dict[str, ToolFn]) -> None:
        corpus = json.dumps({"rings": [{"name": "Z4", "dsl": "Z4"}]})
        data = _call(tools, "separation_search", corpus=corpus)
        assert data["verdict"] == "pass"
        assert data["id"] == "separation-search"
