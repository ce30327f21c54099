"""Joint photon-count statistics of the 2N-photon polarization singlet.

The 2N-photon singlet carries N photons in each of two spatial beams, with
perfectly anticorrelated polarizations::

    |psi_N> = (N+1)^(-1/2) * sum_n (-1)^n |n_H, (N-n)_V>_a |(N-n)_H, n_V>_b

Alice counts ``n`` photons in her H output; Bob counts ``m`` photons in his
V+theta output, where theta is the relative polarizer angle.  Expanding the
rotated mode operators gives a finite alternating sum for the amplitude::

    (-1)^n sqrt(xi) sum_q C(N-m, N-n-q) C(m, q) (-1)^q sin(t)^K cos(t)^(N-K)

with K = 2q + n - m, q running from max(0, m-n) to min(N-n, m), and the
prefactor xi = (N-n)! n! / ((N+1) (N-m)! m!).  Powers of cos and sin are
kept separate (no tan factorization), so both endpoints are exact: at
theta = 0 the table is strictly diagonal (m = n) and at theta = pi/2 it is
strictly anti-diagonal (m = N - n), each nonzero entry equal to 1/(N+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import PhotonNumberRangeError
from .numerics import (
    MAX_PHOTON_NUMBER,
    SignedLogReal,
    log_binomial,
    log_factorial,
    log_pow,
    signed_log_sum,
)

_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True, eq=False)
class JointCountDistribution:
    """Probability table over joint photon counts (n, m).

    ``probs[n, m]`` is the probability that Alice registers n photons and
    Bob m photons; ``mass`` is the declared total (1 up to rounding for
    lossless fixed-N tables, the truncated weight sum for mixtures).  Treat
    ``probs`` as read-only.
    """

    probs: np.ndarray
    mass: float

    @property
    def max_count(self) -> int:
        return self.probs.shape[0] - 1

    def prob(self, n: int, m: int) -> float:
        return float(self.probs[n, m])


def _check_photon_number(N: int) -> None:
    if N < 0:
        raise ValueError(f"photon number per beam must be nonnegative, got {N}")
    if N > MAX_PHOTON_NUMBER:
        raise PhotonNumberRangeError(
            f"photon number per beam {N} exceeds supported range "
            f"N <= {MAX_PHOTON_NUMBER}"
        )


def _check_angle(theta: float) -> None:
    # Angle hygiene lives here: callers reduce to a relative angle first.
    if not 0.0 <= theta <= _HALF_PI:
        raise ValueError(f"relative polarizer angle must lie in [0, pi/2], got {theta}")


def _cos_sin(theta: float) -> tuple[float, float]:
    # math.cos(pi/2) is ~6e-17, not 0; snap so the anti-diagonal support at
    # theta = pi/2 is exact rather than 1e-33-ish.
    if theta == _HALF_PI:
        return 0.0, 1.0
    return math.cos(theta), math.sin(theta)


def singlet_amplitude(N: int, n: int, m: int, theta: float) -> SignedLogReal:
    """Amplitude for Alice counting n (H output) and Bob m (V+theta output).

    Parameters
    ----------
    N : photons per beam, 0 <= N <= 60.
    n, m : counts in [0, N] for Alice and Bob respectively.
    theta : relative polarizer angle in [0, pi/2].

    Returns the signed log-domain amplitude; entries off the supported
    correlation pattern come back as exact zeros.
    """
    _check_photon_number(N)
    _check_angle(theta)
    if not (0 <= n <= N and 0 <= m <= N):
        raise ValueError(f"counts must lie in [0, {N}], got n={n}, m={m}")

    cos_t, sin_t = _cos_sin(theta)
    q_lo = max(0, m - n)
    q_hi = min(N - n, m)
    terms = []
    for q in range(q_lo, q_hi + 1):
        k = 2 * q + n - m
        log_mag = (
            log_binomial(N - m, N - n - q)
            + log_binomial(m, q)
            + log_pow(sin_t, k)
            + log_pow(cos_t, N - k)
        )
        terms.append(SignedLogReal(-1 if q % 2 else 1, log_mag))
    total = signed_log_sum(terms)
    if total.is_zero:
        return total

    log_xi_half = 0.5 * (
        log_factorial(N - n)
        + log_factorial(n)
        - math.log(N + 1)
        - log_factorial(N - m)
        - log_factorial(m)
    )
    sign = -total.sign if n % 2 else total.sign
    return SignedLogReal(sign, total.log_magnitude + log_xi_half)


@lru_cache(maxsize=512)
def _joint_probs(N: int, theta: float) -> np.ndarray:
    probs = np.zeros((N + 1, N + 1))
    for n in range(N + 1):
        for m in range(N + 1):
            probs[n, m] = singlet_amplitude(N, n, m, theta).squared_value()
    return probs


def joint_distribution(N: int, theta: float) -> JointCountDistribution:
    """Joint count table p(n, m | theta) for the 2N-photon singlet.

    The table is (N+1) x (N+1) and sums to 1 within 1e-9 over the whole
    supported range.
    """
    _check_photon_number(N)
    _check_angle(theta)
    probs = _joint_probs(N, theta)
    return JointCountDistribution(probs=probs, mass=float(probs.sum()))


def mean_abs_difference(dist: JointCountDistribution) -> float:
    """Average |m - n| under a joint count distribution."""
    counts = np.arange(dist.max_count + 1)
    return float(np.sum(np.abs(counts[:, None] - counts[None, :]) * dist.probs))
