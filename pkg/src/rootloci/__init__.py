"""Exact-arithmetic partition combinatorics, symmetric polynomials at
special parameter values, and repeated-root ideal computations."""

__version__ = "0.1.0"
