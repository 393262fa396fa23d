"""Exact computations with the Hopf algebras of co-Frobenius finite-type questions."""

__version__ = "0.1.0"
