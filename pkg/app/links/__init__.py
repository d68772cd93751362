"""Continued fractions and two-bridge link normalization."""

from app.links.continued_fraction import (
    ContinuedFraction,
    cf_expand,
    cf_value,
    iter_canonical,
    reverse,
)
from app.links.two_bridge import (
    NormalizationStep,
    TwoBridgeLink,
    canonical_q,
    equivalence_class,
    is_hyperbolic,
    normalize,
)

__all__ = [
    "ContinuedFraction",
    "cf_expand",
    "cf_value",
    "iter_canonical",
    "reverse",
    "NormalizationStep",
    "TwoBridgeLink",
    "canonical_q",
    "equivalence_class",
    "is_hyperbolic",
    "normalize",
]
