"""
hodgekit — exact Hodge-theoretic and enumerative invariants of complete
intersections, cyclic covers of projective space, and Fano schemes of
r-planes in those covers.
"""

__version__ = "0.1.0"
