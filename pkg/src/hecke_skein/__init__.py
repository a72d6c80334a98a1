"""Exact Hecke algebras, the Homfly skein of the annulus, and power-sum elements."""

__version__ = "0.1.0"
