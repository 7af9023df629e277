"""Exact combinatorics of the one- and two-partition Hodge integral formulas."""

__version__ = "0.1.0"
