"""The Cayley-Purser public-key cryptosystem over GL(2, n).

Decryption only needs C (or any unit multiple of it); p and q are kept in
the private key for completeness.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .matrix import Mat2, commutes, mat_pow
from .ringmath import default_rng, gen_distinct_primes, is_probable_prime, rand_below

DEFAULT_R_RANGE = (2, 2**16)
DEFAULT_S_RANGE = (2, 2**16)
HEADER_LEN = 8


class EncryptMode(enum.Enum):
    POWER = "power"
    LINEAR_COMBINATION = "lincomb"


class MalformedPayload(ValueError):
    pass


@dataclass(frozen=True)
class CpPublicKey:
    A: Mat2
    B: Mat2
    G: Mat2

    @property
    def n(self) -> int:
        return self.A.n


@dataclass(frozen=True)
class CpPrivateKey:
    C: Mat2
    p: int
    q: int
    r: int

    @property
    def n(self) -> int:
        return self.C.n


@dataclass(frozen=True)
class CpCiphertext:
    E: Mat2
    Y: Mat2


@dataclass(frozen=True)
class CpEnvelope:
    """A whole message: one session matrix E shared by every block Y."""

    E: Mat2
    blocks: tuple[Mat2, ...]


def random_invertible(n: int, rng: random.Random) -> Mat2:
    while True:
        m = Mat2(n, *(rand_below(n, rng) for _ in range(4)))
        if m.is_invertible():
            return m


def cp_key_from_params(p: int, q: int, A: Mat2, C: Mat2, r: int) -> tuple[CpPublicKey, CpPrivateKey]:
    """Build a key pair from fixed parameters; B = C^-1 A^-1 C, G = C^r."""
    n = p * q
    if p == q:
        raise ValueError("p and q must be distinct")
    if A.n != n or C.n != n:
        raise ValueError("A and C must live mod p*q")
    if commutes(A, C):
        raise ValueError("A and C commute")
    Cinv = C.inv()
    B = Cinv @ A.inv() @ C
    G = mat_pow(C, r)
    return CpPublicKey(A, B, G), CpPrivateKey(C, p, q, r)


def cp_keygen(
    bits: int,
    rng: random.Random | None = None,
    r_range: tuple[int, int] = DEFAULT_R_RANGE,
) -> tuple[CpPublicKey, CpPrivateKey]:
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
        r = rng.randint(*r_range)
        pk, sk = cp_key_from_params(p, q, A, C, r)
        if not pk.G.is_scalar():
            return pk, sk


def _draw_session(pk: CpPublicKey, mode: EncryptMode, rng: random.Random, s_range) -> tuple[Mat2, Mat2, Mat2]:
    n = pk.n
    if pk.G.is_scalar():
        # every candidate D would be scalar and leave E = A
        raise ValueError("public G is a scalar matrix; the key cannot encrypt")
    I = Mat2.identity(n)
    while True:
        if mode is EncryptMode.POWER:
            D = mat_pow(pk.G, rng.randint(*s_range))
        else:
            # by Cayley-Hamilton every power of G is alpha*I + beta*G
            alpha, beta = rand_below(n, rng), rand_below(n, rng)
            D = I.scale(alpha) + pk.G.scale(beta)
        if not D.is_invertible():
            continue
        E, K = session_keys(pk, D)
        if E != pk.A:
            return D, E, K


def session_matrix(pk: CpPublicKey, mode: EncryptMode, rng: random.Random, s_range=DEFAULT_S_RANGE) -> Mat2:
    """Pick the secret D, a matrix commuting with G (and hence with C)."""
    return _draw_session(pk, mode, rng, s_range)[0]


def session_keys(pk: CpPublicKey, D: Mat2) -> tuple[Mat2, Mat2]:
    """(E, K) for a given session matrix D."""
    Dinv = D.inv()
    return Dinv @ pk.A @ D, Dinv @ pk.B @ D


def cp_encrypt_with(pk: CpPublicKey, D: Mat2, X: Mat2) -> CpCiphertext:
    E, K = session_keys(pk, D)
    return CpCiphertext(E, K @ X @ K)


def cp_encrypt(
    pk: CpPublicKey,
    X: Mat2,
    mode: EncryptMode = EncryptMode.POWER,
    rng: random.Random | None = None,
    s_range: tuple[int, int] = DEFAULT_S_RANGE,
) -> CpCiphertext:
    if X.n != pk.n:
        raise ValueError("plaintext modulus differs from key modulus")
    _, E, K = _draw_session(pk, mode, rng or default_rng(), s_range)
    return CpCiphertext(E, K @ X @ K)


def unmask(C_any: Mat2, E: Mat2) -> Mat2:
    """L = C^-1 E C, the inverse of the sender's K."""
    return C_any.inv() @ E @ C_any


def cp_decrypt(C_any: Mat2, ct: CpCiphertext) -> Mat2:
    L = unmask(C_any, ct.E)
    return L @ ct.Y @ L


# ---------------------------------------------------------------------------
# byte messages
# ---------------------------------------------------------------------------


def entry_bytes(n: int) -> int:
    return (n.bit_length() - 1) // 8


def encode_bytes(msg: bytes, n: int) -> list[Mat2]:
    """Pack ``len(msg)`` (8 bytes, big-endian) + msg into matrices, zero padded."""
    width = entry_bytes(n)
    if width < 1:
        raise ValueError(f"modulus {n} too small to carry bytes")
    payload = len(msg).to_bytes(HEADER_LEN, "big") + msg
    block = 4 * width
    payload += b"\x00" * (-len(payload) % block)
    out = []
    for off in range(0, len(payload), block):
        chunk = payload[off : off + block]
        vals = [int.from_bytes(chunk[i * width : (i + 1) * width], "big") for i in range(4)]
        out.append(Mat2(n, *vals))
    return out


def decode_bytes(blocks: list[Mat2], n: int) -> bytes:
    width = entry_bytes(n)
    limit = 1 << (8 * width)
    buf = bytearray()
    for m in blocks:
        for v in m.entries:
            if v >= limit:
                raise MalformedPayload("entry exceeds block width")
            buf += v.to_bytes(width, "big")
    if len(buf) < HEADER_LEN:
        raise MalformedPayload("missing length header")
    length = int.from_bytes(buf[:HEADER_LEN], "big")
    if HEADER_LEN + length > len(buf):
        raise MalformedPayload(f"header claims {length} bytes, only {len(buf) - HEADER_LEN} present")
    return bytes(buf[HEADER_LEN : HEADER_LEN + length])


def encrypt_message(
    pk: CpPublicKey,
    msg: bytes,
    mode: EncryptMode = EncryptMode.POWER,
    rng: random.Random | None = None,
) -> CpEnvelope:
    _, E, K = _draw_session(pk, mode, rng or default_rng(), DEFAULT_S_RANGE)
    return CpEnvelope(E, tuple(K @ X @ K for X in encode_bytes(msg, pk.n)))


def decrypt_message(C_any: Mat2, env: CpEnvelope) -> bytes:
    L = unmask(C_any, env.E)
    return decode_bytes([L @ Y @ L for Y in env.blocks], C_any.n)


def check_private_key(pk: CpPublicKey, sk: CpPrivateKey) -> bool:
    C = sk.C
    return (
        sk.p * sk.q == pk.n
        and is_probable_prime(sk.p)
        and is_probable_prime(sk.q)
        and C @ pk.B == pk.A.inv() @ C
        and mat_pow(C, sk.r) == pk.G
    )
