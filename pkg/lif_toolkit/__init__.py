"""Exact truncated formal power series with Lagrange inversion."""
__version__ = "0.1.0"
