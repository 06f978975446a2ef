"""Test package for MCP Office Documents."""

