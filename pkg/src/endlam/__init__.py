"""Exact curve-sequence toolkit on the doubled-polygon punctured sphere."""

__version__ = "0.1.0"
