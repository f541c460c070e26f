"""Projective Kac-algebra phases on the plane and Weyl-Wigner numerics."""

__version__ = "0.1.0"
