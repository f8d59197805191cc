"""Exact-arithmetic toolkit for Cameron-Liebler line classes.

Builds small projective and affine geometries PG(n,q) / AG(n,q) with
dense point/line indexing, constructs the trivial line-class families,
verifies the counting identities and congruences those classes satisfy
by brute force, and sieves candidate parameters x through every known
modular condition.  All arithmetic is exact (Python integers and
fractions); floating point is never used for a mathematical quantity.
"""

__version__ = "0.1.0"

# Version of the canonical point/line ordering.  Line-class files and all
# machine-readable output are stamped with it; bump it if the ordering of
# points or lines ever changes.
ORDERING_VERSION = "1"

from .errors import BudgetError, UnsupportedError  # noqa: F401
from .exactmath import (  # noqa: F401
    PrimePower,
    facts_check,
    gaussian_binomial,
    segre_disjoint_count,
    theta,
)
