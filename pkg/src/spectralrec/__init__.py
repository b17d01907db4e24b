"""Exact topological recursion, quantum curves and Voros coefficients for genus-0 spectral curves."""

__version__ = "0.1.0"
