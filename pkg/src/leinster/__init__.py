"""Finite-group Leinster-property analysis and verification toolkit."""

__version__ = "0.1.0"
