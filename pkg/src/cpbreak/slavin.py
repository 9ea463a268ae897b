"""Slavin's variant (B = CAC, E = DAD, K = DBD) and the attack that breaks it.

K keys a symmetric layer. The attack recovers C' = C/mu together with
mu^2, which is all that K = mu^2 C'EC' needs; mu itself is never found.
"""

from __future__ import annotations

import hashlib
import hmac
import math
import random
from dataclasses import dataclass
from typing import Protocol

from .cayley_purser import DEFAULT_R_RANGE, DEFAULT_S_RANGE, random_invertible
from .matrix import FactorFound, LinSystem, Mat2, NoUnit, commutes, linearize_commutation, mat_pow, nullspace
from .attacks import AmbiguousNullspace, AttackError
from .ringmath import default_rng, gen_distinct_primes

TAG_LEN = 32


class SymmetricAuthFailure(Exception):
    pass


class DegenerateEntry(AttackError):
    """C'AC' has no unit entry to compare against B."""


class SymmetricCipher(Protocol):
    def encrypt(self, key: bytes, msg: bytes) -> bytes: ...

    def decrypt(self, key: bytes, data: bytes) -> bytes: ...


class HashStreamCipher:
    """SHA-256 counter-mode keystream, then a SHA-256 tag over key || ciphertext."""

    def _stream(self, key: bytes, length: int) -> bytes:
        out = bytearray()
        ctr = 0
        while len(out) < length:
            out += hashlib.sha256(key + ctr.to_bytes(8, "big")).digest()
            ctr += 1
        return bytes(out[:length])

    def encrypt(self, key: bytes, msg: bytes) -> bytes:
        body = bytes(x ^ y for x, y in zip(msg, self._stream(key, len(msg))))
        return body + hashlib.sha256(key + body).digest()

    def decrypt(self, key: bytes, data: bytes) -> bytes:
        if len(data) < TAG_LEN:
            raise SymmetricAuthFailure("ciphertext shorter than tag")
        body, tag = data[:-TAG_LEN], data[-TAG_LEN:]
        if not hmac.compare_digest(tag, hashlib.sha256(key + body).digest()):
            raise SymmetricAuthFailure("integrity tag mismatch")
        return bytes(x ^ y for x, y in zip(body, self._stream(key, len(body))))


DEFAULT_CIPHER = HashStreamCipher()


def key_bytes(K: Mat2) -> bytes:
    width = (K.n.bit_length() + 7) // 8
    return b"".join(v.to_bytes(width, "big") for v in K.entries)


def sym_encrypt(K: Mat2, msg: bytes, cipher: SymmetricCipher = DEFAULT_CIPHER) -> bytes:
    return cipher.encrypt(key_bytes(K), msg)


def sym_decrypt(K: Mat2, data: bytes, cipher: SymmetricCipher = DEFAULT_CIPHER) -> bytes:
    return cipher.decrypt(key_bytes(K), data)


@dataclass(frozen=True)
class SlavinPublicKey:
    A: Mat2
    B: Mat2
    G: Mat2

    @property
    def n(self) -> int:
        return self.A.n


@dataclass(frozen=True)
class SlavinPrivateKey:
    C: Mat2
    p: int
    q: int
    r: int

    @property
    def n(self) -> int:
        return self.C.n


@dataclass(frozen=True)
class SlavinCiphertext:
    E: Mat2
    Y: bytes


@dataclass(frozen=True)
class SlavinBreak:
    C_prime: Mat2
    mu_squared: int


def slavin_key_from_params(p: int, q: int, A: Mat2, C: Mat2, r: int) -> tuple[SlavinPublicKey, SlavinPrivateKey]:
    n = p * q
    if p == q:
        raise ValueError("p and q must be distinct")
    if A.n != n or C.n != n:
        raise ValueError("A and C must live mod p*q")
    if commutes(A, C):
        raise ValueError("A and C commute")
    return SlavinPublicKey(A, C @ A @ C, mat_pow(C, r)), SlavinPrivateKey(C, p, q, r)


def slavin_keygen(
    bits: int,
    rng: random.Random | None = None,
    r_range: tuple[int, int] = DEFAULT_R_RANGE,
) -> tuple[SlavinPublicKey, SlavinPrivateKey]:
    if bits < 16:
        raise ValueError("bits must be >= 16")
    rng = rng or default_rng()
    p, q = gen_distinct_primes(bits // 2, rng)
    n = p * q
    while True:
        A = random_invertible(n, rng)
        C = random_invertible(n, rng)
        if commutes(A, C):
            continue
        pk, sk = slavin_key_from_params(p, q, A, C, rng.randint(*r_range))
        if not pk.G.is_scalar():
            return pk, sk


def slavin_session(pk: SlavinPublicKey, D: Mat2) -> tuple[Mat2, Mat2]:
    """(E, K) = (DAD, DBD)."""
    return D @ pk.A @ D, D @ pk.B @ D


def slavin_encrypt_with(pk: SlavinPublicKey, D: Mat2, msg: bytes, cipher: SymmetricCipher = DEFAULT_CIPHER) -> SlavinCiphertext:
    E, K = slavin_session(pk, D)
    return SlavinCiphertext(E, sym_encrypt(K, msg, cipher))


def slavin_encrypt(
    pk: SlavinPublicKey,
    msg: bytes,
    rng: random.Random | None = None,
    s_range: tuple[int, int] = DEFAULT_S_RANGE,
    cipher: SymmetricCipher = DEFAULT_CIPHER,
) -> SlavinCiphertext:
    rng = rng or default_rng()
    while True:
        D = mat_pow(pk.G, rng.randint(*s_range))
        if D.is_invertible():
            return slavin_encrypt_with(pk, D, msg, cipher)


def slavin_decrypt(C: Mat2, ct: SlavinCiphertext, cipher: SymmetricCipher = DEFAULT_CIPHER) -> bytes:
    L = C @ ct.E @ C
    return sym_decrypt(L, ct.Y, cipher)


def conjugated_G(pk: SlavinPublicKey) -> tuple[Mat2, Mat2]:
    """M = B G B^-1 and N = A G A^-1; the private C satisfies M = C N C^-1."""
    return pk.B @ pk.G @ pk.B.inv(), pk.A @ pk.G @ pk.A.inv()


def build_slavin_system(pk: SlavinPublicKey) -> LinSystem:
    """Rows 1-4: C·N - M·C; rows 5-8: C·G - G·C."""
    M, N = conjugated_G(pk)
    return LinSystem(pk.n, tuple(linearize_commutation(M, N) + linearize_commutation(pk.G, pk.G)))


def _mu_squared(pk: SlavinPublicKey, Cp: Mat2) -> int:
    n = pk.n
    T = Cp @ pk.A @ Cp
    for be, te in zip(pk.B.entries, T.entries):
        g = math.gcd(te, n)
        if g == 1:
            mu2 = be * pow(te, -1, n) % n
            if math.gcd(mu2, n) == 1 and T.scale(mu2) == pk.B:
                return mu2
            raise NoUnit("B is not a unit multiple of C'AC'")
        if 1 < g < n:
            raise FactorFound(g, n)
    raise DegenerateEntry("C'AC' has no unit entry")


def slavin_attack(pk: SlavinPublicKey) -> SlavinBreak:
    """Steps 1-3: public key only, run once per key."""
    n = pk.n
    res = nullspace(build_slavin_system(pk))
    if res.factor is not None:
        raise FactorFound(res.factor, n)
    M, N = conjugated_G(pk)
    last_err: Exception | None = None
    for v in res.basis:
        Cp = Mat2(n, *v)
        g = math.gcd(Cp.det(), n)
        if 1 < g < n:
            raise FactorFound(g, n)
        if g != 1 or Cp @ N != M @ Cp or Cp @ pk.G != pk.G @ Cp:
            continue
        try:
            return SlavinBreak(Cp, _mu_squared(pk, Cp))
        except (NoUnit, DegenerateEntry) as exc:
            last_err = exc
    if len(res.basis) == 1 and isinstance(last_err, DegenerateEntry):
        raise last_err
    raise AmbiguousNullspace(res.basis)


def recover_session_key(brk: SlavinBreak, E: Mat2) -> Mat2:
    """K = mu^2 C' E C'."""
    return (brk.C_prime @ E @ brk.C_prime).scale(brk.mu_squared)


def slavin_attack_decrypt(brk: SlavinBreak, ct: SlavinCiphertext, cipher: SymmetricCipher = DEFAULT_CIPHER) -> bytes:
    """Steps 4-5: per ciphertext, no solving."""
    return sym_decrypt(recover_session_key(brk, ct.E), ct.Y, cipher)
