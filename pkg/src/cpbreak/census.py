"""Conjugacy classes of GL(2, q): closed-form counts and brute-force enumeration.

Every class has a unique rational canonical form, either a scalar matrix
(a 0 / 0 a) or a companion matrix (0 b / 1 c). Non-scalar classes split
by the discriminant trace^2 - 4 det of the characteristic polynomial:
non-square (2a), zero (2b), nonzero square (2c).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from .matrix import Mat2
from .ringmath import is_probable_prime

MAX_ENUM_Q = 13


class NotPrime(ValueError):
    pass


class TooLarge(ValueError):
    pass


class Case(enum.Enum):
    CASE1 = "1"
    CASE2A = "2a"
    CASE2B = "2b"
    CASE2C = "2c"


class CensusRow(NamedTuple):
    case: Case
    class_size: int
    class_count: int


@dataclass(frozen=True)
class ConjClassRecord:
    case_label: Case
    representative: Mat2
    class_size: int
    centralizer_size: int
    class_count_for_case: int = 0


def _check_q(q: int, enumerating: bool = False) -> None:
    if q < 3 or not is_probable_prime(q):
        raise NotPrime(f"{q} is not an odd prime")
    if enumerating and q > MAX_ENUM_Q:
        raise TooLarge(f"enumeration limited to q <= {MAX_ENUM_Q}")


def gl2_order(q: int) -> int:
    return (q * q - 1) * (q * q - q)


def census_by_formula(q: int) -> list[CensusRow]:
    _check_q(q)
    return [
        CensusRow(Case.CASE1, 1, q - 1),
        CensusRow(Case.CASE2A, q * q - q, (q * q - q) // 2),
        CensusRow(Case.CASE2B, q * q - 1, q - 1),
        CensusRow(Case.CASE2C, q * q + q, (q - 1) * (q - 2) // 2),
    ]


def _squares(q: int) -> set[int]:
    return {x * x % q for x in range(1, q)}


def classify(A: Mat2) -> Case:
    """Case of A over prime modulus A.n, decided from its characteristic polynomial."""
    q = A.n
    if A.is_scalar():
        return Case.CASE1
    disc = (A.trace() ** 2 - 4 * A.det()) % q
    if disc == 0:
        return Case.CASE2B
    return Case.CASE2C if disc in _squares(q) else Case.CASE2A


def canonical_form(A: Mat2) -> Mat2:
    if A.is_scalar():
        return A
    # companion of t^2 - c t - b is (0 b / 1 c)
    return Mat2(A.n, 0, -A.det(), 1, A.trace())


def class_size_formula(A: Mat2) -> int:
    q = A.n
    return {row.case: row.class_size for row in census_by_formula(q)}[classify(A)]


def crt_class_size(A: Mat2, p: int, q: int) -> int:
    """Size of the conjugacy class of A in GL(2, pq), from its classes mod p and mod q."""
    if A.n != p * q:
        raise ValueError("A must live mod p*q")
    return class_size_formula(Mat2(p, *A.entries)) * class_size_formula(Mat2(q, *A.entries))


def crt_centralizer_size(A: Mat2, p: int, q: int) -> int:
    return gl2_order(p) * gl2_order(q) // crt_class_size(A, p, q)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


class _Group:
    """All of GL(2, q) as parallel numpy arrays of entries."""

    def __init__(self, q: int):
        self.q = q
        grid = np.indices((q, q, q, q)).reshape(4, -1)
        det = (grid[0] * grid[3] - grid[1] * grid[2]) % q
        keep = det != 0
        self.a, self.b, self.c, self.d = (g[keep] for g in grid)
        det = det[keep]
        dinv = np.array([pow(int(x), -1, q) if x else 0 for x in range(q)])[det]
        self.ia = self.d * dinv % q
        self.ib = -self.b * dinv % q
        self.ic = -self.c * dinv % q
        self.id = self.a * dinv % q

    def __len__(self) -> int:
        return len(self.a)

    def code(self, a, b, c, d):
        q = self.q
        return ((a * q + b) * q + c) * q + d

    def orbit(self, A: Mat2) -> np.ndarray:
        """Codes of g^-1 A g over all g, deduplicated."""
        q = self.q
        # A g
        t11 = (A.a * self.a + A.b * self.c) % q
        t12 = (A.a * self.b + A.b * self.d) % q
        t21 = (A.c * self.a + A.d * self.c) % q
        t22 = (A.c * self.b + A.d * self.d) % q
        r11 = (self.ia * t11 + self.ib * t21) % q
        r12 = (self.ia * t12 + self.ib * t22) % q
        r21 = (self.ic * t11 + self.id * t21) % q
        r22 = (self.ic * t12 + self.id * t22) % q
        return np.unique(self.code(r11, r12, r21, r22))

    def centralizer_count(self, A: Mat2) -> int:
        q = self.q
        ga = (self.a * A.a + self.b * A.c) % q
        gb = (self.a * A.b + self.b * A.d) % q
        gc = (self.c * A.a + self.d * A.c) % q
        gd = (self.c * A.b + self.d * A.d) % q
        ag_a = (A.a * self.a + A.b * self.c) % q
        ag_b = (A.a * self.b + A.b * self.d) % q
        ag_c = (A.c * self.a + A.d * self.c) % q
        ag_d = (A.c * self.b + A.d * self.d) % q
        return int(np.count_nonzero((ga == ag_a) & (gb == ag_b) & (gc == ag_c) & (gd == ag_d)))


def _decode(code: int, q: int) -> Mat2:
    d = code % q
    code //= q
    c = code % q
    code //= q
    return Mat2(q, code // q, code % q, c, d)


def _is_canonical(m: Mat2) -> bool:
    return m.is_scalar() or (m.a == 0 and m.c == 1)


def centralizer_size(A: Mat2) -> int:
    """Brute-force count of invertible X with XA = AX."""
    _check_q(A.n, enumerating=True)
    return _Group(A.n).centralizer_count(A)


def census_by_enumeration(q: int) -> list[ConjClassRecord]:
    """Partition GL(2, q) into conjugacy classes by orbit computation."""
    _check_q(q, enumerating=True)
    group = _Group(q)
    seen = np.zeros(q**4, dtype=bool)
    records = []
    codes = group.code(group.a, group.b, group.c, group.d)
    for code in codes:
        if seen[code]:
            continue
        A = _decode(int(code), q)
        orb = group.orbit(A)
        seen[orb] = True
        canon = [m for m in (_decode(int(x), q) for x in orb) if _is_canonical(m)]
        if len(canon) != 1:
            raise RuntimeError(f"class of {A} has {len(canon)} canonical forms")
        rep = canon[0]
        records.append(ConjClassRecord(classify(rep), rep, len(orb), group.centralizer_count(rep)))
    if not seen[codes].all() or seen.sum() != len(group):
        raise RuntimeError("orbits do not partition the group")
    per_case = Counter(r.case_label for r in records)
    return [replace(r, class_count_for_case=per_case[r.case_label]) for r in records]


def summarize(records: list[ConjClassRecord]) -> list[CensusRow]:
    """Collapse records to (case, size, count) rows in formula order."""
    tally = Counter((r.case_label, r.class_size) for r in records)
    order = list(Case)
    return sorted((CensusRow(c, s, k) for (c, s), k in tally.items()), key=lambda row: (order.index(row.case), row.class_size))


def format_table(q: int, enumerate_classes: bool = False) -> str:
    formula = census_by_formula(q)
    enum_rows = summarize(census_by_enumeration(q)) if enumerate_classes else None
    lines = [f"GL(2,{q}): order {gl2_order(q)}"]
    header = f"{'case':<8}{'class size':>12}{'# classes':>12}"
    if enum_rows is not None:
        header += f"{'enumeration':>14}"
    lines.append(header)
    lines.append("-" * len(header))
    for row in formula:
        line = f"({row.case.value})".ljust(8) + f"{row.class_size:>12}{row.class_count:>12}"
        if enum_rows is not None:
            line += f"{'agree' if row in enum_rows else 'DISAGREE':>14}"
        lines.append(line)
    total = sum(r.class_size * r.class_count for r in formula)
    lines.append(f"sum size*count = {total}")
    if enum_rows is not None:
        lines.append("verdict: " + ("match" if enum_rows == formula else "MISMATCH"))
    return "\n".join(lines)
