"""Two-bridge links K(p, q) in the normal form used by the spine construction."""

from dataclasses import dataclass, field
from enum import Enum
from math import gcd

from app.common.errors import (
    ValidationError,
    require_coprime,
    require_modulus,
    require_nonzero_residue,
)
from app.common.logger import get_logger
from app.links.continued_fraction import (
    ContinuedFraction,
    cf_value,
    euclid_quotients,
    fold_trailing_one,
)

logger = get_logger(__name__)


class NormalizationStep(str, Enum):
    """A move applied while bringing (p, q) to normal form."""

    REDUCE = "reduce-mod-p"
    MIRROR = "mirror"
    FOLD = "fold"


@dataclass(frozen=True)
class TwoBridgeLink:
    """A normalized two-bridge link with its canonical continued fraction.

    Normal form means 1 <= q < p, gcd(p, q) = 1 and q <= p - q, which forces
    a_1 >= 2 in the expansion of p/q.
    """

    p: int
    q: int
    cf: ContinuedFraction
    trace: tuple[NormalizationStep, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if gcd(self.p, self.q) != 1 or not 0 < self.q <= self.p - self.q:
            raise ValidationError(f"({self.p}, {self.q}) is not in normal form")
        if cf_value(self.cf) != (self.p, self.q):
            raise ValidationError(f"{self.cf} does not evaluate to {self.p}/{self.q}")

    @property
    def n(self) -> int:
        """Length of the canonical continued fraction."""
        return self.cf.n

    @property
    def components(self) -> int:
        """1 for a knot (p odd), 2 for a two-component link (p even)."""
        return 1 if self.p % 2 else 2

    @property
    def is_knot(self) -> bool:
        return self.components == 1

    def __str__(self) -> str:
        return f"K({self.p},{self.q})"


def normalize(p: int, q: int) -> TwoBridgeLink:
    """Bring (p, q) to normal form.

    q is reduced into (0, p); when the residue exceeds p/2 it is replaced by
    p - q, which passes to the mirror image and leaves the complement's
    complexity unchanged. Each applied move is recorded in the link's trace.

    Raises:
        ModulusError: If p < 2.
        ResidueRangeError: If q = 0 mod p.
        NotCoprimeError: If gcd(p, q mod p) != 1.
    """
    require_modulus(p)
    require_nonzero_residue(p, q)

    steps: list[NormalizationStep] = []
    residue = q % p
    if residue != q:
        steps.append(NormalizationStep.REDUCE)
    require_coprime(p, residue)

    if residue > p - residue:
        residue = p - residue
        steps.append(NormalizationStep.MIRROR)

    raw = euclid_quotients(p, residue)
    entries = fold_trailing_one(raw)
    if entries != raw:
        steps.append(NormalizationStep.FOLD)
    cf = ContinuedFraction(tuple(entries))
    link = TwoBridgeLink(p=p, q=residue, cf=cf, trace=tuple(steps))
    logger.debug(f"normalize({p}, {q}) -> {link} {cf} steps={[s.value for s in steps]}")
    return link


def equivalence_class(link: TwoBridgeLink) -> frozenset[int]:
    """The q-values whose links have homeomorphic complements, up to mirror.

    Returns {q, p - q, q^-1 mod p, p - (q^-1 mod p)}; its minimum is the
    canonical representative used by the census.
    """
    p, q = link.p, link.q
    inverse = pow(q, -1, p)
    return frozenset({q, p - q, inverse, p - inverse})


def canonical_q(link: TwoBridgeLink) -> int:
    """Minimum of the link's equivalence class."""
    return min(equivalence_class(link))


def is_hyperbolic(link: TwoBridgeLink) -> bool:
    """True unless the link is a (2, k) torus link K(p, 1).

    The criterion q not in {1, p - 1} comes from the standard classification
    of two-bridge links, not from the bound derivations themselves. In normal
    form it is equivalent to the canonical cf having n >= 2.
    """
    return link.n >= 2
