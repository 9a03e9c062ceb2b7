"""
dendro-segal-toolkit: tree categories as free operads, the boundary
functors to Δ, Λ, Fin_* and Fin_ne, finite Segal and 2-Segal checkers, and
the equivalence between 2-Segal simplicial sets and invertible operads.
"""

__version__ = "1.0.0"
