"""Detector loss as a Bernoulli thinning channel.

Each photon is detected independently with probability eta, identical for
both observers (asymmetric efficiencies are out of scope).  An ideal joint
count table p(n, m) therefore maps to

    P(x, y) = sum_{n>=x} sum_{m>=y} C(n,x) C(m,y) eta^(x+y)
              (1-eta)^(n+m-x-y) p(n, m),

i.e. independent binomial thinning of each observer's total count.
"""

from __future__ import annotations

import numpy as np
from scipy import stats

from .singlet import JointCountDistribution


def check_efficiency(eta: float) -> None:
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"detection efficiency must lie in [0, 1], got {eta}")


def thinning_matrix(max_count: int, eta: float) -> np.ndarray:
    """T[x, n] = P(detect x | n present) = Binomial(n, eta) pmf at x."""
    check_efficiency(eta)
    counts = np.arange(max_count + 1)
    return stats.binom.pmf(counts[:, None], counts[None, :], eta)


def binomial_thin(dist: JointCountDistribution, eta: float) -> JointCountDistribution:
    """Apply the loss channel at efficiency eta to both observers' counts.

    Preserves total mass and the count-table size; thinning at eta1 then
    eta2 composes to thinning at eta1 * eta2.
    """
    t = thinning_matrix(dist.max_count, eta)
    probs = t @ dist.probs @ t.T
    return JointCountDistribution(probs=probs, mass=float(probs.sum()))
