"""Log-domain kernel tests against exact big-integer arithmetic."""

import math

import numpy as np
import pytest

from svbell.numerics import (
    LOG_ZERO,
    SignedLogReal,
    log_binomial,
    log_factorial,
    log_pow,
    signed_log_sum,
)


def test_log_factorial_trivial():
    assert log_factorial(0) == 0.0
    assert log_factorial(1) == 0.0


def test_log_factorial_ten():
    assert log_factorial(10) == pytest.approx(math.log(3628800), rel=1e-12)


@pytest.mark.parametrize("k", [2, 5, 20, 60, 100, 200, 300, 10_000, 1_000_000])
def test_log_factorial_against_big_integers(k):
    # math.log handles arbitrarily large ints exactly enough for this check.
    exact = math.log(math.factorial(k))
    assert log_factorial(k) == pytest.approx(exact, rel=1e-12)


def test_log_factorial_rejects_negative():
    with pytest.raises(ValueError):
        log_factorial(-1)


def test_log_binomial_examples():
    assert log_binomial(5, 2) == pytest.approx(math.log(10), rel=1e-12)
    assert log_binomial(5, 7) == LOG_ZERO
    assert log_binomial(5, -1) == LOG_ZERO
    assert log_binomial(60, 30) == pytest.approx(math.log(math.comb(60, 30)), rel=1e-12)


def test_log_binomial_matches_exact_binomials_up_to_200():
    for n in range(201):
        for k in range(n + 1):
            assert math.exp(log_binomial(n, k)) == pytest.approx(
                math.comb(n, k), rel=1e-10
            )


def test_log_pow_zero_base():
    assert log_pow(0.0, 0) == 0.0
    assert log_pow(0.0, 3) == LOG_ZERO
    assert log_pow(2.0, 3) == pytest.approx(3 * math.log(2.0))


def test_signed_log_sum_exact_cancellation():
    terms = [SignedLogReal(1, 0.0), SignedLogReal(-1, 0.0)]
    assert signed_log_sum(terms).is_zero


def test_signed_log_sum_identity():
    result = signed_log_sum([SignedLogReal(1, 0.0)])
    assert result.sign == 1
    assert result.log_magnitude == 0.0


def test_signed_log_sum_mixed_terms():
    # 2e^2 - e^1 = 12.0598...
    terms = [SignedLogReal(1, 2.0), SignedLogReal(1, 2.0), SignedLogReal(-1, 1.0)]
    result = signed_log_sum(terms)
    assert result.sign == 1
    expected = 2 * math.exp(2.0) - math.exp(1.0)
    assert result.value() == pytest.approx(expected, rel=1e-12)


def test_signed_log_sum_empty_and_zero_terms():
    assert signed_log_sum([]).is_zero
    assert signed_log_sum([SignedLogReal.zero()] * 3).is_zero


@pytest.mark.parametrize("size", [10, 100, 1000, 10_000])
def test_signed_log_sum_permutation_invariant(size):
    rng = np.random.default_rng(size)
    logs = rng.uniform(-50.0, 50.0, size=size)
    signs = rng.choice([-1, 1], size=size)
    terms = [SignedLogReal(int(s), float(l)) for s, l in zip(signs, logs)]
    reference = signed_log_sum(terms)
    perm = rng.permutation(size)
    shuffled = signed_log_sum([terms[i] for i in perm])
    assert shuffled.sign == reference.sign
    assert shuffled.log_magnitude == pytest.approx(reference.log_magnitude, rel=1e-12)


def test_from_value_round_trip():
    for x in [3.5, -1.25e-200, 2.0e200]:
        assert SignedLogReal.from_value(x).value() == pytest.approx(x, rel=1e-12)
    assert SignedLogReal.from_value(0.0).is_zero
    assert SignedLogReal.from_value(0.0).value() == 0.0


def test_squared_value():
    assert SignedLogReal(-1, 1.0).squared_value() == pytest.approx(math.e**2, rel=1e-12)
    assert SignedLogReal.zero().squared_value() == 0.0
