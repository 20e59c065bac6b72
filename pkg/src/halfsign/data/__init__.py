"""Vendored coefficient fixtures (package data)."""
