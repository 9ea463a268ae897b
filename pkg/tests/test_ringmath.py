import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpbreak.ringmath import (
    NotInvertible,
    gen_distinct_primes,
    gen_prime,
    is_probable_prime,
    mod_inv,
    mod_pow,
    rand_below,
)

N1 = 28757


def test_mod_inv_examples():
    assert mod_inv(1, N1) == 1
    assert mod_inv(3, N1) == 9586
    assert 3 * 9586 % N1 == 1


def test_mod_inv_reveals_factor():
    with pytest.raises(NotInvertible) as info:
        mod_inv(193, N1)
    assert info.value.g == 193
    assert info.value.is_factor
    with pytest.raises(NotInvertible) as info:
        mod_inv(0, N1)
    assert not info.value.is_factor


def test_mod_pow_examples():
    assert mod_pow(5, 0, N1) == 1
    assert mod_pow(2, 10, N1) == 1024
    # oracle: plain multiplication, then reduce
    assert mod_pow(2910, 2, N1) == 2910 * 2910 % N1 == 13542


@given(st.integers(2, 10**6), st.integers(0, 10**6))
def test_mod_inv_property(n, x):
    x %= n
    if math.gcd(x, n) == 1:
        assert mod_inv(x, n) * x % n == 1
    else:
        with pytest.raises(NotInvertible) as info:
            mod_inv(x, n)
        assert info.value.g == math.gcd(x, n)


@given(st.integers(2, 10**9), st.integers(0, 10**9), st.integers(0, 500), st.integers(0, 500))
def test_mod_pow_adds_exponents(n, x, e1, e2):
    x %= n
    assert mod_pow(x, e1 + e2, n) == mod_pow(x, e1, n) * mod_pow(x, e2, n) % n


def _trial_prime(m):
    return m > 1 and all(m % d for d in range(2, math.isqrt(m) + 1))


def test_primality_against_trial_division():
    rng = random.Random(0)
    for m in range(0, 5000):
        assert is_probable_prime(m, rng) == _trial_prime(m), m


def test_carmichael_rejected():
    for m in (561, 1105, 1729, 2465, 2821, 6601, 8911, 3215031751):
        assert not is_probable_prime(m)


@pytest.mark.parametrize("seed", range(20))
def test_gen_prime_8bit(seed):
    p = gen_prime(8, random.Random(seed))
    assert 128 <= p <= 255
    assert _trial_prime(p)


def test_gen_prime_width():
    rng = random.Random(5)
    for bits in (16, 32, 64, 128):
        assert gen_prime(bits, rng).bit_length() == bits
    with pytest.raises(ValueError):
        gen_prime(7, rng)


def test_distinct_primes():
    rng = random.Random(9)
    for _ in range(20):
        p, q = gen_distinct_primes(16, rng)
        assert p != q


def test_rand_below_range():
    rng = random.Random(3)
    assert {rand_below(2, rng) for _ in range(200)} == {0, 1}
    assert all(0 <= rand_below(N1, rng) < N1 for _ in range(1000))


def test_rand_below_uniform():
    rng = random.Random(11)
    counts = [0] * 5
    for _ in range(10_000):
        counts[rand_below(5, rng)] += 1
    # binomial sigma for p = 1/5, 10^4 draws
    sigma = math.sqrt(10_000 * 0.2 * 0.8)
    assert all(abs(c - 2000) < 5 * sigma for c in counts)
    chi2 = sum((c - 2000) ** 2 / 2000 for c in counts)
    assert chi2 < 18.47  # 0.999 quantile, 4 dof


def test_seeded_reproducible():
    a = [gen_prime(32, random.Random(7)) for _ in range(2)]
    assert a[0] == a[1]
