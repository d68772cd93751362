"""Upper and lower bounds on the complexity of two-bridge link complements.

Upper bounds come from counting true vertices of explicit spines (or, for
the Sakuma-Weeks bound, tetrahedra of the canonical decomposition). The
lower bound combines a volume estimate for hyperbolic two-bridge links
with the fact that, for hyperbolic links, complexity equals the minimal
number of ideal tetrahedra.
"""

from math import ceil
from typing import Any

from pydantic import BaseModel, ConfigDict, field_serializer, model_validator

from app.common.errors import (
    LowerBoundUnavailableError,
    ValidationError,
    require_canonical,
    require_two_entries,
)
from app.common.logger import get_logger
from app.links.continued_fraction import ContinuedFraction
from app.links.two_bridge import TwoBridgeLink, is_hyperbolic, normalize

logger = get_logger(__name__)

# Volume of the regular ideal hyperbolic tetrahedron.
V3 = 1.0149416064096536

# Printed as 2.6667...; any value in [2.6667, 3) gives the same integer bound.
PV_CONSTANT = 2.6667


def _require_construction(cf: ContinuedFraction) -> None:
    require_two_entries(cf.n)
    require_canonical(cf.entries)


def lemma1_bound(cf: ContinuedFraction) -> int:
    """Vertex count of the collapsed pillowcase spine: sum(a_i) + 2(n - 3).

    Raises:
        TooShortError: If n < 2.
        NonCanonicalError: If a_1 = 1 or a_n = 1.
    """
    _require_construction(cf)
    return cf.total + 2 * (cf.n - 3)


def theorem1_bound(cf: ContinuedFraction) -> int:
    """sum(a_i) + 2(n - 3) - #{a_i = 1}, after every replacement move.

    Raises:
        TooShortError: If n < 2.
        NonCanonicalError: If a_1 = 1 or a_n = 1.
    """
    return lemma1_bound(cf) - cf.ones


def sakuma_weeks_bound(cf: ContinuedFraction) -> int:
    """2 sum(a_i) - 6, from the canonical ideal triangulation.

    Raises:
        TooShortError: If n < 2.
        NonCanonicalError: If a_1 = 1 or a_n = 1.
    """
    _require_construction(cf)
    return 2 * cf.total - 6


def sakuma_weeks_gap(cf: ContinuedFraction) -> int:
    """How much the spine bound improves on the triangulation bound.

    Equals sum(a_i) - (2n - #{a_i = 1}); zero exactly when every a_i <= 2.
    """
    return sakuma_weeks_bound(cf) - theorem1_bound(cf)


def lower_bound(link: TwoBridgeLink) -> tuple[int, float]:
    """Volume lower bound on the complexity of a hyperbolic two-bridge link.

    Returns:
        (ceil(m), v3 * m) with m = max(2, 2n - 2.6667). The integer part
        equals max(2, 2n - 2).

    Raises:
        LowerBoundUnavailableError: If the link is not hyperbolic.
    """
    if not is_hyperbolic(link):
        msg = f"lower bound unavailable: {link} is a torus link, not hyperbolic"
        logger.warning(msg)
        raise LowerBoundUnavailableError(msg)

    m = max(2.0, 2 * link.n - PV_CONSTANT)
    return ceil(m), V3 * m


class BoundReport(BaseModel):
    """All bounds for one link; serializes to a flat JSON object."""

    model_config = ConfigDict(frozen=True)

    p: int
    q: int
    cf: list[int]
    n: int
    upper_thm1: int | None
    upper_lemma1: int | None
    upper_sw: int | None
    lower: int
    lower_volume: float | None
    exact: int | None
    hyperbolic: bool

    @model_validator(mode="after")
    def _check_invariants(self) -> "BoundReport":
        if self.upper_thm1 is None:
            return self
        ones = sum(1 for a in self.cf if a == 1)
        if self.upper_lemma1 is None or self.upper_thm1 != self.upper_lemma1 - ones:
            raise ValueError("upper_thm1 must equal upper_lemma1 - #{a_i = 1}")
        if self.upper_sw is None or self.upper_thm1 > self.upper_sw:
            raise ValueError("upper_thm1 must not exceed upper_sw")
        if self.hyperbolic and self.lower > self.upper_thm1:
            raise ValueError("complexity interval is empty")
        return self

    @field_serializer("lower_volume")
    def _round_volume(self, value: float | None) -> float | None:
        return None if value is None else round(value, 6)

    @property
    def link(self) -> TwoBridgeLink:
        return normalize(self.p, self.q)

    @property
    def interval(self) -> tuple[int, int | None]:
        """(lower, upper_thm1)."""
        return self.lower, self.upper_thm1

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return self.model_dump(mode="json")


def complexity_interval(link: TwoBridgeLink) -> BoundReport:
    """Assemble every bound for a link with n >= 2.

    exact is set when the lower bound meets the Theorem 1 upper bound.

    Raises:
        TooShortError: If n < 2.
    """
    require_two_entries(link.n)
    cf = link.cf
    upper = theorem1_bound(cf)

    hyperbolic = is_hyperbolic(link)
    if hyperbolic:
        lower, lower_volume = lower_bound(link)
    else:
        lower, lower_volume = 0, None

    report = BoundReport(
        p=link.p,
        q=link.q,
        cf=cf.to_list(),
        n=cf.n,
        upper_thm1=upper,
        upper_lemma1=lemma1_bound(cf),
        upper_sw=sakuma_weeks_bound(cf),
        lower=lower,
        lower_volume=lower_volume,
        exact=upper if lower == upper else None,
        hyperbolic=hyperbolic,
    )
    logger.debug(f"{link}: interval [{lower}, {upper}] exact={report.exact}")
    return report


def torus_report(link: TwoBridgeLink) -> BoundReport:
    """Report for a torus link K(p, 1): no upper bound, lower 0, not hyperbolic.

    Raises:
        ValidationError: If the link has n >= 2.
    """
    if link.n >= 2:
        raise ValidationError(f"{link} is not a torus link")
    return BoundReport(
        p=link.p,
        q=link.q,
        cf=link.cf.to_list(),
        n=link.n,
        upper_thm1=None,
        upper_lemma1=None,
        upper_sw=None,
        lower=0,
        lower_volume=None,
        exact=None,
        hyperbolic=False,
    )


def report_for(link: TwoBridgeLink) -> BoundReport:
    """complexity_interval for n >= 2, torus_report otherwise."""
    return complexity_interval(link) if link.n >= 2 else torus_report(link)
