"""Log-domain combinatorial kernels.

Every probability amplitude in this package is an alternating sum of
products of binomial coefficients and trig powers.  Evaluated naively those
products overflow long before the supported photon-number range ends, and
the sums cancel catastrophically near the middle of the count table, so
each term is carried as a sign plus the natural log of its magnitude.  Sums
factor out the largest magnitude before accumulating, which keeps photon
numbers up to 60 per beam accurate in double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

# Largest photon number per beam the amplitude sums support in double
# precision; callers reject larger values instead of silently degrading.
MAX_PHOTON_NUMBER = 60

LOG_ZERO = float("-inf")

# Scaled sums below this fraction of the largest term are pure cancellation
# noise and collapse to an exact zero.
_CANCEL_EPS = 1e-300


@dataclass(frozen=True)
class SignedLogReal:
    """A real number stored as a sign and the natural log of its magnitude.

    ``sign`` is -1, 0 or +1; ``log_magnitude`` is meaningless when
    ``sign == 0`` (exact zero).
    """

    sign: int
    log_magnitude: float = LOG_ZERO

    @classmethod
    def zero(cls) -> "SignedLogReal":
        return cls(0, LOG_ZERO)

    @classmethod
    def from_value(cls, x: float) -> "SignedLogReal":
        if x == 0.0:
            return cls.zero()
        return cls(1 if x > 0.0 else -1, math.log(abs(x)))

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def value(self) -> float:
        """Collapse to a plain float (may under/overflow for extreme logs)."""
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_magnitude)

    def squared_value(self) -> float:
        """|x|^2 as a plain float; exact 0 for the zero element."""
        if self.sign == 0:
            return 0.0
        return math.exp(2.0 * self.log_magnitude)


def log_factorial(k: int) -> float:
    """ln(k!) for k >= 0."""
    if k < 0:
        raise ValueError(f"factorial argument must be nonnegative, got {k}")
    return math.lgamma(k + 1.0)


def log_binomial(n: int, k: int) -> float:
    """ln C(n, k); -inf when the coefficient is zero (k outside [0, n])."""
    if n < 0:
        raise ValueError(f"binomial order must be nonnegative, got {n}")
    if k < 0 or k > n:
        return LOG_ZERO
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k)


def log_pow(base: float, exponent: int) -> float:
    """ln(base**exponent) for base >= 0, with base**0 == 1 even at base 0."""
    if exponent == 0:
        return 0.0
    if base == 0.0:
        return LOG_ZERO
    return exponent * math.log(base)


def signed_log_sum(terms: Iterable[SignedLogReal]) -> SignedLogReal:
    """Sum signed log-domain terms without leaving log space.

    The largest magnitude is factored out and the rescaled signed terms are
    accumulated with ``math.fsum`` (exactly rounded, hence independent of
    term order).  Sums cancelling below 1e-300 of the largest magnitude
    return the exact zero element.
    """
    live = [t for t in terms if t.sign != 0 and t.log_magnitude != LOG_ZERO]
    if not live:
        return SignedLogReal.zero()
    log_max = max(t.log_magnitude for t in live)
    scaled = math.fsum(t.sign * math.exp(t.log_magnitude - log_max) for t in live)
    if abs(scaled) < _CANCEL_EPS:
        return SignedLogReal.zero()
    return SignedLogReal(1 if scaled > 0.0 else -1, log_max + math.log(abs(scaled)))
