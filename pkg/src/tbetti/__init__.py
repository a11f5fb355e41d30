"""Betti numbers of transversal monomial ideals and pluri-circulant initial ideals."""

__version__ = "0.1.0"
