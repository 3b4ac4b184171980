"""Exact distributions of adjacency-difference statistics on k-ary words
and set partitions, cross-validated three ways: brute-force enumeration,
dynamic-programming recurrences, and closed-form generating functions.
"""

from .algebra import (
    InternalInvariantViolation,
    NotExpandable,
    PQPoly,
    QPoly,
    RatFunc,
    SquareMatrix,
    XPoly,
    alt_cheb_sum,
    alt_cheb_sum_closed,
    chebyshev_u,
    det_exact,
    series_expand,
    specialize_q,
)
from .kary import KSParams

__version__ = "0.1.0"

__all__ = [
    "InternalInvariantViolation",
    "KSParams",
    "NotExpandable",
    "PQPoly",
    "QPoly",
    "RatFunc",
    "SquareMatrix",
    "XPoly",
    "alt_cheb_sum",
    "alt_cheb_sum_closed",
    "chebyshev_u",
    "det_exact",
    "series_expand",
    "specialize_q",
    "__version__",
]
