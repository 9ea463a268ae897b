"""Scalar arithmetic over Z_n: inverses, powers, primes and randomness."""

from __future__ import annotations

import math
import random

# Small primes used to reject most composites before Miller-Rabin.
_SMALL_PRIMES = [p for p in range(3, 1000) if all(p % d for d in range(2, math.isqrt(p) + 1))]

MR_ROUNDS = 40


class NotInvertible(ArithmeticError):
    """Raised when a value has no inverse modulo ``n``.

    ``g`` is ``gcd(x, n)``. When ``1 < g < n`` it is a nontrivial factor of
    the modulus, which the caller should treat as a total break.
    """

    def __init__(self, g: int, n: int):
        self.g = g
        self.n = n
        super().__init__(f"not invertible mod {n} (gcd = {g})")

    @property
    def is_factor(self) -> bool:
        return 1 < self.g < self.n


def default_rng() -> random.Random:
    return random.SystemRandom()


def seeded_rng(seed: int) -> random.Random:
    return random.Random(seed)


def mod_inv(x: int, n: int) -> int:
    x %= n
    g = math.gcd(x, n)
    if g != 1 or n == 1:
        raise NotInvertible(g, n)
    return pow(x, -1, n)


def mod_pow(x: int, e: int, n: int) -> int:
    if e < 0:
        raise ValueError("negative exponent")
    return pow(x, e, n)


def is_unit(x: int, n: int) -> bool:
    return math.gcd(x % n, n) == 1


def rand_below(n: int, rng: random.Random) -> int:
    # randrange draws getrandbits and rejects, so there is no modulo bias
    return rng.randrange(n)


def rand_unit(n: int, rng: random.Random) -> int:
    while True:
        x = rng.randrange(1, n)
        if math.gcd(x, n) == 1:
            return x


def is_probable_prime(m: int, rng: random.Random | None = None, rounds: int = MR_ROUNDS) -> bool:
    if m < 2:
        return False
    if m in (2, 3):
        return True
    if m % 2 == 0:
        return False
    for p in _SMALL_PRIMES:
        if m == p:
            return True
        if m % p == 0:
            return False
    rng = rng or default_rng()
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for _ in range(rounds):
        a = rng.randrange(2, m - 1)
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def gen_prime(bits: int, rng: random.Random) -> int:
    """Random probable prime with exactly ``bits`` bits."""
    if bits < 8:
        raise ValueError("bits must be >= 8")
    while True:
        cand = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(cand, rng):
            return cand


def gen_distinct_primes(bits: int, rng: random.Random) -> tuple[int, int]:
    p = gen_prime(bits, rng)
    q = gen_prime(bits, rng)
    while q == p:
        q = gen_prime(bits, rng)
    return p, q
