"""Domain errors and validation guards.

Every guard logs the violation at WARNING before raising, so a rejected
input is visible in the log stream even when the caller swallows it.
"""

from math import gcd
from typing import Sequence

from app.common.logger import get_logger

logger = get_logger(__name__)


class ComplexityError(Exception):
    """Base class for every error raised by the toolkit."""


class ValidationError(ComplexityError, ValueError):
    """Input violates a precondition."""


class ModulusError(ValidationError):
    """p is smaller than 2."""


class ResidueRangeError(ValidationError):
    """q lies outside (0, p) or is divisible by p."""


class NotCoprimeError(ValidationError):
    """p and q share a common factor."""


class ContinuedFractionError(ValidationError):
    """Empty sequence or a non-positive partial quotient."""


class NonCanonicalError(ValidationError):
    """First or last partial quotient equals 1 where canonical form is required."""


class TooShortError(ValidationError):
    """The continued fraction has fewer than two entries."""


class PretzelError(ValidationError):
    """Pretzel parameters violate the magnitude constraints."""


class CoverDegreeError(ValidationError):
    """Covering degree below 2."""


class ReplacementError(ComplexityError):
    """Illegal replacement move on a spine ledger."""


class LowerBoundUnavailableError(ComplexityError):
    """No volume lower bound exists for a non-hyperbolic link."""


class VolumeTableError(ComplexityError):
    """Malformed or duplicate row in a volume table."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


def _reject(error: type[ComplexityError], msg: str) -> None:
    logger.warning(f"[red]Rejected:[/red] {msg}")
    raise error(msg)


def require_modulus(p: int) -> None:
    """Check p >= 2.

    Raises:
        ModulusError: If p < 2.
    """
    if p < 2:
        _reject(ModulusError, f"p must be at least 2, got {p}")


def require_residue(p: int, q: int) -> None:
    """Check 1 <= q < p.

    Raises:
        ResidueRangeError: If q is outside (0, p).
    """
    if not 0 < q < p:
        _reject(ResidueRangeError, f"q must satisfy 0 < q < p, got q={q} for p={p}")


def require_nonzero_residue(p: int, q: int) -> None:
    """Check q is not divisible by p.

    Raises:
        ResidueRangeError: If q = 0 mod p.
    """
    if q % p == 0:
        _reject(ResidueRangeError, f"q must be nonzero mod p, got q={q} for p={p}")


def require_coprime(p: int, q: int) -> None:
    """Check gcd(p, q) = 1.

    Raises:
        NotCoprimeError: If p and q share a factor.
    """
    g = gcd(p, q)
    if g != 1:
        _reject(NotCoprimeError, f"p and q must be coprime, gcd({p}, {q}) = {g}")


def require_entries(entries: Sequence[int]) -> None:
    """Check a partial-quotient sequence is non-empty and positive.

    Raises:
        ContinuedFractionError: On an empty sequence, a non-integer entry or
            an entry below 1.
    """
    if len(entries) == 0:
        _reject(ContinuedFractionError, "continued fraction must have at least one entry")
    for index, value in enumerate(entries, start=1):
        if isinstance(value, bool) or not isinstance(value, int):
            _reject(
                ContinuedFractionError,
                f"partial quotients must be integers, a_{index} = {value!r}",
            )
        if value < 1:
            _reject(
                ContinuedFractionError,
                f"partial quotients must be positive, a_{index} = {value}",
            )


def require_two_entries(n: int) -> None:
    """Check n >= 2.

    Raises:
        TooShortError: If n < 2.
    """
    if n < 2:
        _reject(
            TooShortError,
            f"construction needs n >= 2 twist regions, got n = {n} (torus link)",
        )


def require_canonical(entries: Sequence[int]) -> None:
    """Check a_1 >= 2 and a_n >= 2.

    Raises:
        NonCanonicalError: If an end entry equals 1.
    """
    if entries[0] < 2 or entries[-1] < 2:
        _reject(
            NonCanonicalError,
            f"canonical form needs a_1 >= 2 and a_n >= 2, got {list(entries)}",
        )


def require_cover_degree(d: int) -> None:
    """Check d >= 2; M_1 is the 3-sphere and its bound would mislead.

    Raises:
        CoverDegreeError: If d < 2.
    """
    if d < 2:
        _reject(CoverDegreeError, f"covering degree must be at least 2, got d = {d}")


def require_pretzel(a: Sequence[int]) -> None:
    """Check n >= 2, every |a_i| > 0 and |a_1|, |a_n| > 1.

    Raises:
        PretzelError: On any violated magnitude constraint.
    """
    if len(a) < 2:
        _reject(PretzelError, f"pretzel link needs at least two tangles, got {list(a)}")
    if any(value == 0 for value in a):
        _reject(PretzelError, f"pretzel twists must be nonzero, got {list(a)}")
    if abs(a[0]) < 2 or abs(a[-1]) < 2:
        _reject(PretzelError, f"pretzel link needs |a_1| > 1 and |a_n| > 1, got {list(a)}")
