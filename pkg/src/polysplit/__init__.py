"""Exact arithmetic for splitting types, arrangement incidence algebras,
polysymmetric bases, and lambda-ring zeta inversion."""

__version__ = "0.1.0"
