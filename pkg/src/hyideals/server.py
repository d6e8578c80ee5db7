"""FastMCP server entry point for hyideals."""

from __future__ import annotations

import logging

from mcp.server.fastmcp import FastMCP

from hyideals.config import Config
from hyideals.tools import calculus, relative, rings, verify
from hyideals.workbench import Workbench

logger = logging.getLogger(__name__)


def create_server(config: Config | None = None) -> FastMCP:
    bench = Workbench(config or Config.from_env())
    mcp = FastMCP("hyideals")
    rings.register_tools(mcp, bench)
    calculus.register_tools(mcp, bench)
    relative.register_tools(mcp, bench)
    verify.register_tools(mcp, bench)
    return mcp


def serve(config: Config | None = None) -> None:
    # stdio only; stdout carries the protocol, so logs stay on stderr
    logger.info("serving hyideals tools over stdio")
    create_server(config).run(transport="stdio")


def main() -> None:
    serve()


if __name__ == "__main__":
    main()
