"""Colouring graphs, generalised chromatic polynomials and reconstruction of G from C_k(G)."""

__version__ = "0.1.0"
