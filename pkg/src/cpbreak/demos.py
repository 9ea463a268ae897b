"""Replays of the three published toy examples, printing every intermediate."""

from __future__ import annotations

from .attacks import build_cp_system, cayley_hamilton_attack, linear_algebra_attack
from .cayley_purser import cp_key_from_params
from .matrix import Mat2, is_scalar_multiple, mat_pow, nullspace
from .slavin import (
    build_slavin_system,
    conjugated_G,
    recover_session_key,
    slavin_attack,
    slavin_key_from_params,
    slavin_session,
)

# Cayley-Purser toy key (examples 1 and 2)
CP_P, CP_Q, CP_R = 193, 149, 7
CP_N = CP_P * CP_Q
CP_A = Mat2(CP_N, 16807, 19399, 7483, 18143)
CP_C = Mat2(CP_N, 2910, 1657, 5341, 24803)

# Slavin toy key (example 3), session exponent s = 129
SLV_P, SLV_Q, SLV_R, SLV_S = 223, 173, 11, 129
SLV_N = SLV_P * SLV_Q
SLV_A = Mat2(SLV_N, 16807, 38390, 17333, 21788)
SLV_C = Mat2(SLV_N, 10106, 10420, 27722, 27626)


def _m(label: str, m: Mat2) -> str:
    pad = " " * (len(label) + 3)
    first, second = m.pretty().split("\n")
    return f"{label} = {first}\n{pad}{second}"


def demo1() -> str:
    pk, sk = cp_key_from_params(CP_P, CP_Q, CP_A, CP_C, CP_R)
    system = build_cp_system(pk.A, pk.B, pk.G)
    res = nullspace(system)
    rk = linear_algebra_attack(pk)
    out = [
        f"p = {CP_P}, q = {CP_Q}, n = {CP_N}, r = {CP_R}",
        _m("A", pk.A),
        _m("C", sk.C),
        _m("B", pk.B),
        _m("G", pk.G),
        "system (rows: CB = A^-1 C, then CG = GC):",
        system.pretty(),
        f"solution: (a, b, c, d) = mu * {res.basis[0]}",
        f"recovered C' = {is_scalar_multiple(rk.C_prime, sk.C)} * C",
    ]
    return "\n".join(out)


def demo2() -> str:
    pk, sk = cp_key_from_params(CP_P, CP_Q, CP_A, CP_C, CP_R)
    Ainv = pk.A.inv()
    rk = cayley_hamilton_attack(pk, fallback=False)
    out = [
        _m("B - A^-1", pk.B - Ainv),
        _m("A^-1 G - G B", Ainv @ pk.G - pk.G @ pk.B),
        f"alpha = {rk.alpha}",
        _m("alpha*I + G", rk.C_prime),
        f"alpha*I + G = {is_scalar_multiple(rk.C_prime, sk.C)} * C",
    ]
    return "\n".join(out)


def demo3() -> str:
    pk, sk = slavin_key_from_params(SLV_P, SLV_Q, SLV_A, SLV_C, SLV_R)
    M, N = conjugated_G(pk)
    system = build_slavin_system(pk)
    brk = slavin_attack(pk)
    D = mat_pow(pk.G, SLV_S)
    E, K = slavin_session(pk, D)
    out = [
        f"p = {SLV_P}, q = {SLV_Q}, n = {SLV_N}, r = {SLV_R}",
        _m("A", pk.A),
        _m("C", sk.C),
        _m("B", pk.B),
        _m("G", pk.G),
        _m("M = B G B^-1", M),
        _m("N = A G A^-1", N),
        "system (rows: CN = MC, then CG = GC):",
        system.pretty(),
        _m("C'", brk.C_prime),
        _m("C' A C'", brk.C_prime @ pk.A @ brk.C_prime),
        f"mu^2 = {brk.mu_squared}",
        f"session D = G^{SLV_S}",
        _m("D", D),
        _m("E = DAD", E),
        _m("K = DBD", K),
        _m("mu^2 C'EC'", recover_session_key(brk, E)),
        "recovered K matches: " + str(recover_session_key(brk, E) == K),
    ]
    return "\n".join(out)


DEMOS = {1: demo1, 2: demo2, 3: demo3}
