"""Exact apolarity computations for binary forms."""

__version__ = "0.1.0"
