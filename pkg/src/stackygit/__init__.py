"""Exact computer algebra for stacky GIT quotients of graded rings.

Cyclotomic arithmetic, sparse exact polynomials, graded-ring stack
operations (Veronese, root stacks, rigidification), binary polyhedral
groups with Klein's symmetry catalog of binary forms, the classical
invariant-ring catalog, and exact divisor/singularity verification.
"""

from .cyclotomic import CyclotomicNumber, QQ, zeta

__all__ = ["CyclotomicNumber", "QQ", "zeta"]
__version__ = "0.1.0"
