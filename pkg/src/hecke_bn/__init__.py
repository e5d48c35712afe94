"""Kazhdan-Lusztig cells, cell modules and Specht modules for Hecke algebras of type B_n."""

__version__ = "0.1.0"
