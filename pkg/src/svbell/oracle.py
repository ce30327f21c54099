"""Brute-force validators for the closed-form machinery.

Two independent computation paths live here:

* a four-mode Fock-space construction of the 2N-photon singlet plus explicit
  multinomial expansion of rotated number states, giving projection
  amplitudes by sparse inner product with exact integer binomials, and
* a seeded Monte-Carlo realization of Bernoulli detector loss.

Neither path shares code with the closed-form modules; that independence is
the point.  Scale is deliberately small (N <= 10).
"""

from __future__ import annotations

import math

import numpy as np

from .errors import PhotonNumberRangeError
from .singlet import JointCountDistribution

# Oracle scale: exact enumeration stays cheap and obviously correct here.
MAX_ORACLE_PHOTON_NUMBER = 10

FockVector = dict[tuple[int, int, int, int], float]


def build_singlet(N: int) -> FockVector:
    """Sparse four-mode Fock vector of the 2N-photon singlet.

    Keys are occupations (aH, aV, bH, bV); the amplitude on
    |n, N-n>_a |N-n, n>_b is (-1)^n / sqrt(N+1).
    """
    if N < 0:
        raise ValueError(f"photon number per beam must be nonnegative, got {N}")
    if N > MAX_ORACLE_PHOTON_NUMBER:
        raise PhotonNumberRangeError(
            f"oracle supports N <= {MAX_ORACLE_PHOTON_NUMBER}, got {N}"
        )
    norm = 1.0 / math.sqrt(N + 1)
    return {
        (n, N - n, N - n, n): (-norm if n % 2 else norm)
        for n in range(N + 1)
    }


def _rotated_number_state(j: int, k: int, phi: float) -> list[float]:
    """Coefficients of |j_{H+phi}, k_{V+phi}> in the (H, V) Fock basis.

    Entry w of the returned list multiplies |w, j+k-w>.  Derived by binomial
    expansion of the rotated creation operators

        c_{H+phi} = cos(phi) c_H + sin(phi) c_V
        c_{V+phi} = -sin(phi) c_H + cos(phi) c_V

    raised to the j-th and k-th powers, with exact integer binomials.
    """
    total = j + k
    cos_p, sin_p = math.cos(phi), math.sin(phi)
    coeffs = [0.0] * (total + 1)
    for p in range(j + 1):
        for q in range(k + 1):
            w = p + q
            coeffs[w] += (
                math.comb(j, p)
                * math.comb(k, q)
                * cos_p**p
                * sin_p ** (j - p)
                * (-sin_p) ** q
                * cos_p ** (k - q)
                * math.sqrt(
                    math.factorial(w)
                    * math.factorial(total - w)
                    / (math.factorial(j) * math.factorial(k))
                )
            )
    return coeffs


def rotated_projection_amplitude(
    state: FockVector,
    N: int,
    n: int,
    m: int,
    theta: float,
    theta_alice: float = 0.0,
) -> float:
    """Overlap of ``state`` with rotated local number states.

    Projects onto |n_{H+theta_alice}, (N-n)_{V+theta_alice}>_a together with
    |(N-m)_{H+theta}, m_{V+theta}>_b.  With the default theta_alice = 0 this
    is the amplitude behind p(n, m | theta); a nonzero theta_alice checks
    that joint statistics depend on the polarizer angles only through their
    difference.
    """
    if N > MAX_ORACLE_PHOTON_NUMBER:
        raise PhotonNumberRangeError(
            f"oracle supports N <= {MAX_ORACLE_PHOTON_NUMBER}, got {N}"
        )
    if not (0 <= n <= N and 0 <= m <= N):
        raise ValueError(f"counts must lie in [0, {N}], got n={n}, m={m}")
    alice = _rotated_number_state(n, N - n, theta_alice)
    bob = _rotated_number_state(N - m, m, theta)
    total = 0.0
    for (a_h, _a_v, b_h, _b_v), amp in state.items():
        total += amp * alice[a_h] * bob[b_h]
    return total


def oracle_joint_distribution(
    N: int, theta: float, theta_alice: float = 0.0
) -> np.ndarray:
    """Full (N+1) x (N+1) joint count table computed by brute force."""
    state = build_singlet(N)
    probs = np.zeros((N + 1, N + 1))
    for n in range(N + 1):
        for m in range(N + 1):
            amp = rotated_projection_amplitude(state, N, n, m, theta, theta_alice)
            probs[n, m] = amp * amp
    return probs


def mc_thin(
    dist: JointCountDistribution, eta: float, samples: int, seed: int
) -> JointCountDistribution:
    """Empirical loss channel: sample joint counts, thin each binomially.

    Draws (n, m) pairs from ``dist`` (normalized by its mass), replaces each
    count by a Binomial(count, eta) draw, and histograms the result.  The
    output is rescaled by the input mass so it estimates the same table that
    the exact channel produces.  Deterministic for a fixed seed.
    """
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"detection efficiency must lie in [0, 1], got {eta}")
    if samples < 1:
        raise ValueError(f"need at least one sample, got {samples}")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    size = dist.max_count + 1
    flat = dist.probs.ravel()
    draws = rng.choice(flat.size, size=samples, p=flat / dist.mass)
    n_drawn, m_drawn = np.divmod(draws, size)
    x = rng.binomial(n_drawn, eta)
    y = rng.binomial(m_drawn, eta)
    counts = np.bincount(x * size + y, minlength=size * size).reshape(size, size)
    probs = counts * (dist.mass / samples)
    return JointCountDistribution(probs=probs, mass=float(probs.sum()))
