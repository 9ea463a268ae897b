"""Key recovery against Cayley-Purser public keys.

Both attacks recover C only up to a unit scalar, which is enough: the
scalar cancels in C^-1 E C.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .cayley_purser import CpCiphertext, CpEnvelope, CpPublicKey, cp_decrypt, decrypt_message
from .matrix import FactorFound, LinSystem, Mat2, linearize_commutation, nullspace


class AttackError(Exception):
    pass


class AmbiguousNullspace(AttackError):
    def __init__(self, basis):
        self.basis = basis
        super().__init__(f"solution space has dimension {len(basis)} and no basis vector is a usable key")


class DegenerateBeta(AttackError):
    """C is not of the form alpha*I + G for this key."""


class Method(enum.Enum):
    LINEAR_ALGEBRA = "linear"
    CAYLEY_HAMILTON = "cayley-hamilton"


@dataclass(frozen=True)
class RecoveredKey:
    C_prime: Mat2
    method: Method
    alpha: int | None = None


def build_cp_system(A: Mat2, B: Mat2, G: Mat2) -> LinSystem:
    """Eight rows in (a, b, c, d): C·B - A^-1·C (rows 1-4) and C·G - G·C (rows 5-8)."""
    rows = linearize_commutation(A.inv(), B) + linearize_commutation(G, G)
    return LinSystem(A.n, tuple(rows))


def is_valid_key(pk: CpPublicKey, Cp: Mat2) -> bool:
    return Cp.is_invertible() and Cp @ pk.B == pk.A.inv() @ Cp and Cp @ pk.G == pk.G @ Cp


def linear_algebra_attack(pk: CpPublicKey) -> RecoveredKey:
    n = pk.n
    res = nullspace(build_cp_system(pk.A, pk.B, pk.G))
    if res.factor is not None:
        raise FactorFound(res.factor, n)
    for v in res.basis:
        cand = Mat2(n, *v)
        g = math.gcd(cand.det(), n)
        if 1 < g < n:
            raise FactorFound(g, n)
        if is_valid_key(pk, cand):
            return RecoveredKey(cand, Method.LINEAR_ALGEBRA)
    raise AmbiguousNullspace(res.basis)


def cayley_hamilton_attack(pk: CpPublicKey, fallback: bool = True) -> RecoveredKey:
    """Solve alpha*(B - A^-1) = A^-1 G - G B for alpha and take C' = alpha*I + G.

    With ``fallback`` a degenerate key (C not expressible as alpha*I + G)
    is handed to the linear-algebra attack instead of raising DegenerateBeta.
    """
    n = pk.n
    Ainv = pk.A.inv()
    P = pk.B - Ainv
    Q = Ainv @ pk.G - pk.G @ pk.B
    alpha = None
    for pe, qe in zip(P.entries, Q.entries):
        g = math.gcd(pe, n)
        if g == 1:
            alpha = qe * pow(pe, -1, n) % n
            break
        if 1 < g < n:
            raise FactorFound(g, n)
    if alpha is not None and P.scale(alpha) == Q:
        cand = Mat2.scalar(alpha, n) + pk.G
        if is_valid_key(pk, cand):
            return RecoveredKey(cand, Method.CAYLEY_HAMILTON, alpha)
    # beta = 0 would make C scalar, which cannot satisfy AC != CA; try alpha = 0
    if is_valid_key(pk, pk.G):
        return RecoveredKey(pk.G, Method.CAYLEY_HAMILTON, 0)
    if fallback:
        return linear_algebra_attack(pk)
    raise DegenerateBeta("no alpha with C' = alpha*I + G satisfies the key equations")


def recover_key(pk: CpPublicKey, method: Method = Method.LINEAR_ALGEBRA) -> RecoveredKey:
    if method is Method.LINEAR_ALGEBRA:
        return linear_algebra_attack(pk)
    return cayley_hamilton_attack(pk)


def attack_decrypt(rk: RecoveredKey, ct: CpCiphertext) -> Mat2:
    return cp_decrypt(rk.C_prime, ct)


def attack_decrypt_message(rk: RecoveredKey, env: CpEnvelope) -> bytes:
    return decrypt_message(rk.C_prime, env)
