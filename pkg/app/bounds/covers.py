"""Complexity bounds for meridian-cyclic branched coverings M_d(K(p, q))."""

from pydantic import BaseModel, ConfigDict, model_validator

from app.bounds.complexity import theorem1_bound
from app.common.errors import require_cover_degree
from app.common.logger import get_logger
from app.links.two_bridge import TwoBridgeLink

logger = get_logger(__name__)


class CoverBound(BaseModel):
    """Upper bound on c(M_d) from lifting the spine to the d-fold cover.

    The lifted spine contributes d copies of the link-complement spine. Capping
    off with meridian disks adds one vertex per sheet for a knot; a second disk
    on the other component of a two-component link adds two more.
    """

    model_config = ConfigDict(frozen=True)

    p: int
    q: int
    d: int
    r: int
    upper_thm1: int
    lifted_vertices: int
    disk_vertices: int
    value: int

    @model_validator(mode="after")
    def _check_invariants(self) -> "CoverBound":
        if self.r != (1 if self.p % 2 else 3):
            raise ValueError("r must be 1 for odd p and 3 for even p")
        if self.value != self.d * self.upper_thm1 + self.r * self.d:
            raise ValueError("value must equal d * upper_thm1 + r * d")
        return self


def cover_bound(link: TwoBridgeLink, d: int) -> CoverBound:
    """Bound c(M_d(K(p, q))) <= d * theorem1_bound + r * d.

    Args:
        link: Normalized link with n >= 2.
        d: Covering degree, at least 2.

    Raises:
        CoverDegreeError: If d < 2.
        TooShortError: If the link's cf has n < 2.
    """
    require_cover_degree(d)
    upper = theorem1_bound(link.cf)
    r = 1 if link.is_knot else 3
    bound = CoverBound(
        p=link.p,
        q=link.q,
        d=d,
        r=r,
        upper_thm1=upper,
        lifted_vertices=d * upper,
        disk_vertices=r * d,
        value=d * upper + r * d,
    )
    logger.debug(f"cover_bound({link}, d={d}) = {bound.value} (r={r})")
    return bound
