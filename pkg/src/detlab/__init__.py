"""Exact computations with determinant laws on algebras over commutative rings."""

__version__ = "0.1.0"
