"""Crystals, atomic decompositions and the charge statistic for Sp(4)."""

__version__ = "0.1.0"
