"""Link families with closed-form complexity data."""

from typing import Iterator, Sequence

from pydantic import BaseModel, ConfigDict

from app.common.errors import require_pretzel, require_two_entries
from app.common.logger import get_logger
from app.links.continued_fraction import ContinuedFraction, cf_value
from app.links.two_bridge import TwoBridgeLink, normalize

logger = get_logger(__name__)


def cor2_fraction(n: int) -> ContinuedFraction:
    """[2, 1, ..., 1, 2] of length n."""
    require_two_entries(n)
    return ContinuedFraction((2,) + (1,) * (n - 2) + (2,))


def cor2_family(n: int) -> tuple[TwoBridgeLink, int]:
    """The link with p/q = [2, 1, ..., 1, 2] and its exact complexity 2n - 2.

    The spine bound and the volume lower bound coincide on this family:
    n = 2 is the figure-eight knot, n = 3 the Whitehead link.

    Raises:
        TooShortError: If n < 2.
    """
    cf = cor2_fraction(n)
    p, q = cf_value(cf)
    link = normalize(p, q)
    return link, 2 * n - 2


def cor2_members(max_p: int) -> Iterator[tuple[TwoBridgeLink, int]]:
    """Every family member with p <= max_p, by increasing n."""
    n = 2
    while True:
        p, _ = cf_value(cor2_fraction(n))
        if p > max_p:
            return
        yield cor2_family(n)
        n += 1


def pretzel_bound(a: Sequence[int]) -> int:
    """|a_1| + 2 sum|a_i| + |a_n| + n - 4 for the pretzel link P(a_1, ..., a_n).

    Raises:
        PretzelError: If n < 2, some a_i = 0, or |a_1| or |a_n| equals 1.
    """
    require_pretzel(a)
    magnitudes = [abs(value) for value in a]
    return magnitudes[0] + 2 * sum(magnitudes) + magnitudes[-1] + len(a) - 4


class PretzelSpine(BaseModel):
    """Sizes of the pretzel spine construction."""

    model_config = ConfigDict(frozen=True)

    twists: list[int]
    tubes: int
    disks: int
    vertices: int


def pretzel_spine(a: Sequence[int]) -> PretzelSpine:
    """Construction summary: 2(n - 1) + 1 tubes and n disks attached to the tangles.

    Raises:
        PretzelError: As pretzel_bound.
    """
    vertices = pretzel_bound(a)
    n = len(a)
    spine = PretzelSpine(twists=list(a), tubes=2 * (n - 1) + 1, disks=n, vertices=vertices)
    logger.debug(f"pretzel_spine({list(a)}) -> {spine}")
    return spine
