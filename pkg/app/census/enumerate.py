"""Enumeration of two-bridge link complements up to homeomorphism and mirror."""

from math import gcd

from app.common.errors import require_modulus
from app.common.logger import get_logger
from app.links.two_bridge import TwoBridgeLink, canonical_q, normalize

logger = get_logger(__name__)


def enumerate_links(max_p: int) -> list[TwoBridgeLink]:
    """One canonical representative per equivalence class with p <= max_p.

    Only q <= p/2 is scanned: every class is closed under q -> p - q, so its
    minimum always lies there. Torus links K(p, 1) are included.

    Returns:
        Links ordered by (p, q*).

    Raises:
        ModulusError: If max_p < 2.
    """
    require_modulus(max_p)
    links: list[TwoBridgeLink] = []
    for p in range(2, max_p + 1):
        for q in range(1, p // 2 + 1):
            if gcd(p, q) != 1:
                continue
            link = normalize(p, q)
            if canonical_q(link) == q:
                links.append(link)
    logger.debug(f"enumerate_links({max_p}) -> {len(links)} classes")
    return links
