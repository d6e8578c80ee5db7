"""MCP tool modules for hyideals."""
