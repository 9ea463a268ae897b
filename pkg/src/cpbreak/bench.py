"""Timing Cayley-Purser against textbook RSA at equal modulus size."""

from __future__ import annotations

import math
import random
import statistics
import time
from dataclasses import dataclass, field

from .cayley_purser import EncryptMode, cp_decrypt, cp_encrypt, cp_keygen
from .matrix import Mat2
from .ringmath import default_rng, gen_distinct_primes, mod_inv, rand_below

RSA_E = 65537
WARMUP = 5
CLAIMED_SPEEDUP = "20-30x (1999 figures)"


@dataclass(frozen=True)
class RsaKey:
    n: int
    e: int
    d: int
    p: int
    q: int


def rsa_keygen(bits: int, rng: random.Random | None = None) -> RsaKey:
    if bits < 64:
        raise ValueError("bits must be >= 64")
    rng = rng or default_rng()
    while True:
        p, q = gen_distinct_primes(bits // 2, rng)
        lam = math.lcm(p - 1, q - 1)
        if math.gcd(RSA_E, lam) == 1:
            return RsaKey(p * q, RSA_E, mod_inv(RSA_E, lam), p, q)


def rsa_encrypt(key: RsaKey, m: int) -> int:
    return pow(m, key.e, key.n)


def rsa_decrypt(key: RsaKey, c: int) -> int:
    return pow(c, key.d, key.n)


@dataclass
class BenchReport:
    modulus_bits: int
    iterations: int
    # mean seconds per call
    means: dict[str, float] = field(default_factory=dict)

    @property
    def rsa_dec_over_cp_dec(self) -> float:
        return self.means["rsa_decrypt"] / self.means["cp_decrypt"]

    @property
    def rsa_enc_over_cp_lincomb(self) -> float:
        return self.means["rsa_encrypt"] / self.means["cp_encrypt_lincomb"]

    def to_text(self) -> str:
        lines = [
            f"modulus {self.modulus_bits} bits, {self.iterations} iterations (+{WARMUP} warm-up), "
            f"RSA e={RSA_E} without CRT, full-width random plaintexts",
            f"{'operation':<22}{'mean (us)':>14}",
        ]
        for name, val in self.means.items():
            lines.append(f"{name:<22}{val * 1e6:>14.2f}")
        lines.append(f"rsa_decrypt / cp_decrypt         = {self.rsa_dec_over_cp_dec:.2f}")
        lines.append(f"rsa_encrypt / cp_encrypt_lincomb = {self.rsa_enc_over_cp_lincomb:.2f}")
        lines.append(f"historically reported speedup: {CLAIMED_SPEEDUP}")
        return "\n".join(lines)

    def to_kv(self) -> str:
        out = {"modulus_bits": self.modulus_bits, "iterations": self.iterations}
        out.update({f"mean_{k}": f"{v:.9f}" for k, v in self.means.items()})
        out["ratio_rsa_decrypt_cp_decrypt"] = f"{self.rsa_dec_over_cp_dec:.4f}"
        out["ratio_rsa_encrypt_cp_encrypt_lincomb"] = f"{self.rsa_enc_over_cp_lincomb:.4f}"
        return "\n".join(f"{k}={v}" for k, v in out.items())


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def run_bench(bits: int, iterations: int, rng: random.Random | None = None) -> BenchReport:
    if iterations < 10:
        raise ValueError("iterations must be >= 10")
    rng = rng or default_rng()
    pk, sk = cp_keygen(bits, rng)
    rsa = rsa_keygen(bits, rng)
    n = pk.n
    samples: dict[str, list[float]] = {
        k: [] for k in ("cp_encrypt_power", "cp_encrypt_lincomb", "cp_decrypt", "rsa_encrypt", "rsa_decrypt")
    }
    for i in range(WARMUP + iterations):
        X = Mat2(n, *(rand_below(n, rng) for _ in range(4)))
        ct_pow, t_pow = _timed(cp_encrypt, pk, X, EncryptMode.POWER, rng)
        ct_lin, t_lin = _timed(cp_encrypt, pk, X, EncryptMode.LINEAR_COMBINATION, rng)
        out, t_dec = _timed(cp_decrypt, sk.C, ct_lin)
        if out != X or cp_decrypt(sk.C, ct_pow) != X:
            raise RuntimeError("Cayley-Purser round trip failed during benchmark")
        m = rand_below(rsa.n, rng)
        c, t_renc = _timed(rsa_encrypt, rsa, m)
        m2, t_rdec = _timed(rsa_decrypt, rsa, c)
        if m2 != m:
            raise RuntimeError("RSA round trip failed during benchmark")
        if i < WARMUP:
            continue
        for key, val in zip(samples, (t_pow, t_lin, t_dec, t_renc, t_rdec)):
            samples[key].append(val)
    return BenchReport(bits, iterations, {k: statistics.fmean(v) for k, v in samples.items()})

