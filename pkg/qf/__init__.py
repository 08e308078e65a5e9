"""Exact quandle colorings, cocycle invariants and Alexander-matrix tools."""

__version__ = "0.1.0"
