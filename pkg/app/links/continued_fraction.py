"""Regular continued fractions with positive partial quotients.

All arithmetic is exact integer arithmetic. The canonical expansion of
p/q ends with a partial quotient >= 2, which makes it unique.
"""

from dataclasses import dataclass
from typing import Iterator, Sequence

from app.common.errors import (
    ContinuedFractionError,
    require_coprime,
    require_entries,
    require_modulus,
    require_residue,
)
from app.common.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ContinuedFraction:
    """Partial quotients [a_1, ..., a_n] of a regular continued fraction."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        require_entries(self.entries)
        object.__setattr__(self, "entries", tuple(self.entries))

    @property
    def n(self) -> int:
        """Number of partial quotients."""
        return len(self.entries)

    @property
    def total(self) -> int:
        """Sum of the partial quotients."""
        return sum(self.entries)

    @property
    def ones(self) -> int:
        """Number of partial quotients equal to 1."""
        return sum(1 for a in self.entries if a == 1)

    @property
    def is_canonical(self) -> bool:
        """True when n >= 2 and both end entries are at least 2."""
        return self.n >= 2 and self.entries[0] >= 2 and self.entries[-1] >= 2

    def __getitem__(self, i: int) -> int:
        """1-based access to a_i."""
        if not 1 <= i <= self.n:
            raise IndexError(f"partial quotient index {i} outside 1..{self.n}")
        return self.entries[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.entries) + "]"

    def to_list(self) -> list[int]:
        """Entries as a plain list."""
        return list(self.entries)

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        """Parse "a1,a2,...,an" (brackets and spaces tolerated).

        Raises:
            ContinuedFractionError: If an entry is not an integer or not positive.
        """
        body = text.strip().strip("[]")
        parts = [part.strip() for part in body.split(",") if part.strip()]
        try:
            values = [int(part) for part in parts]
        except ValueError as e:
            raise ContinuedFractionError(f"malformed continued fraction {text!r}: {e}") from e
        return cls(tuple(values))


def fold_trailing_one(entries: list[int]) -> list[int]:
    """Rewrite [..., a, 1] as [..., a + 1]; both have the same value."""
    if len(entries) >= 2 and entries[-1] == 1:
        return entries[:-2] + [entries[-2] + 1]
    return entries


def euclid_quotients(p: int, q: int) -> list[int]:
    """Quotients of the Euclidean algorithm on (p, q), unfolded."""
    quotients: list[int] = []
    num, den = p, q
    while den:
        a, rem = divmod(num, den)
        quotients.append(a)
        num, den = den, rem
    return quotients


def cf_expand(p: int, q: int) -> ContinuedFraction:
    """Expand p/q into its canonical regular continued fraction.

    Args:
        p: Numerator, at least 2.
        q: Denominator with 1 <= q < p and gcd(p, q) = 1.

    Returns:
        The unique expansion with positive entries and last entry >= 2.

    Raises:
        ModulusError: If p < 2.
        ResidueRangeError: If q is outside (0, p).
        NotCoprimeError: If gcd(p, q) != 1.
    """
    require_modulus(p)
    require_residue(p, q)
    require_coprime(p, q)

    entries = fold_trailing_one(euclid_quotients(p, q))
    logger.debug(f"cf_expand({p}, {q}) -> {entries}")
    return ContinuedFraction(tuple(entries))


def cf_value(cf: ContinuedFraction | Sequence[int]) -> tuple[int, int]:
    """Evaluate a_1 + 1/(a_2 + 1/(... + 1/a_n)) as a reduced pair (p, q).

    Raises:
        ContinuedFractionError: On an empty sequence or a non-positive entry.
    """
    if not isinstance(cf, ContinuedFraction):
        cf = ContinuedFraction(tuple(cf))

    num, den = 1, 0
    for a in reversed(cf.entries):
        num, den = den + num * a, num
    return num, den


def reverse(cf: ContinuedFraction) -> ContinuedFraction:
    """Reverse the partial quotients.

    For a cf of p/q with n entries the reversal evaluates to p/q' with
    q * q' = (-1)^(n+1) mod p, so q' is q^-1 or p - q^-1.
    """
    return ContinuedFraction(cf.entries[::-1])


def iter_canonical(max_sum: int) -> Iterator[ContinuedFraction]:
    """Yield every canonical cf (n >= 2, a_1, a_n >= 2) with sum <= max_sum.

    Order is lexicographic on the entry tuples.
    """

    def extend(prefix: list[int], remaining: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) >= 2 and prefix[-1] >= 2:
            yield tuple(prefix)
        for a in range(1, remaining + 1):
            yield from extend(prefix + [a], remaining - a)

    for first in range(2, max_sum + 1):
        for entries in extend([first], max_sum - first):
            yield ContinuedFraction(entries)
