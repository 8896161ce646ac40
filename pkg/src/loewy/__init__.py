"""Radicals, Loewy series and chain conditions on finite and procedural lattices."""

__version__ = "0.1.0"
