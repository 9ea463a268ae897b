"""2x2 matrices over Z_n and a homogeneous linear solver over Z_n.

Z_n is not a field when n is composite, so elimination only pivots on
units. A column whose remaining entries are all nonzero non-units yields
gcd(entry, n), a proper factor of n.
"""

from __future__ import annotations

import math
from collections import Counter
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator, Sequence

from .ringmath import NotInvertible, mod_inv

# Call counters for the expensive primitives; tests read these to check that
# an algorithm does (or does not) exponentiate or re-solve.
OPS: Counter = Counter()


@contextmanager
def count_ops() -> Iterator[Counter]:
    """Collect ``OPS`` increments made inside the block into the yielded Counter."""
    before = OPS.copy()
    delta: Counter = Counter()
    try:
        yield delta
    finally:
        for key, val in OPS.items():
            if val - before.get(key, 0):
                delta[key] = val - before.get(key, 0)


class ModulusMismatch(ValueError):
    pass


class NoUnit(ArithmeticError):
    """No unit scalar relates the two matrices."""


class FactorFound(Exception):
    """A proper factor of the modulus turned up during a computation."""

    def __init__(self, g: int, n: int):
        self.g = g
        self.n = n
        super().__init__(f"found factor {g} of {n} (cofactor {n // g})")


@dataclass(frozen=True, slots=True)
class Mat2:
    """The matrix (a b / c d) with entries reduced mod n."""

    n: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("modulus must be >= 2")
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % self.n)

    @classmethod
    def identity(cls, n: int) -> Mat2:
        return cls(n, 1, 0, 0, 1)

    @classmethod
    def scalar(cls, k: int, n: int) -> Mat2:
        return cls(n, k, 0, 0, k)

    @classmethod
    def parse(cls, text: str, n: int) -> Mat2:
        parts = text.split()
        if len(parts) != 4:
            raise ValueError(f"expected 4 entries, got {len(parts)}")
        vals = [int(x) for x in parts]
        if any(not 0 <= v < n for v in vals):
            raise ValueError("matrix entry out of range")
        return cls(n, *vals)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return f"{self.a} {self.b} {self.c} {self.d}"

    def pretty(self) -> str:
        w = max(len(str(x)) for x in self.entries)
        return f"[{self.a:>{w}} {self.b:>{w}}]\n[{self.c:>{w}} {self.d:>{w}}]"

    def _check(self, other: Mat2) -> None:
        if self.n != other.n:
            raise ModulusMismatch(f"{self.n} != {other.n}")

    def __matmul__(self, other: Mat2) -> Mat2:
        self._check(other)
        return Mat2(
            self.n,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __add__(self, other: Mat2) -> Mat2:
        self._check(other)
        return Mat2(self.n, self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: Mat2) -> Mat2:
        self._check(other)
        return Mat2(self.n, self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> Mat2:
        return Mat2(self.n, -self.a, -self.b, -self.c, -self.d)

    def scale(self, k: int) -> Mat2:
        return Mat2(self.n, k * self.a, k * self.b, k * self.c, k * self.d)

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.n

    def trace(self) -> int:
        return (self.a + self.d) % self.n

    def is_scalar(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def is_invertible(self) -> bool:
        return math.gcd(self.det(), self.n) == 1

    def inv(self) -> Mat2:
        return mat_inv(self)

    def __pow__(self, e: int) -> Mat2:
        return mat_pow(self, e)


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    return x @ y


def det(x: Mat2) -> int:
    return x.det()


def char_poly(x: Mat2) -> tuple[int, int]:
    """(trace, det): the characteristic polynomial is t^2 - trace*t + det."""
    return x.trace(), x.det()


def mat_inv(x: Mat2) -> Mat2:
    dinv = mod_inv(x.det(), x.n)
    return Mat2(x.n, x.d * dinv, -x.b * dinv, -x.c * dinv, x.a * dinv)


def mat_pow(x: Mat2, e: int) -> Mat2:
    if e < 0:
        raise ValueError("negative exponent; invert first")
    OPS["mat_pow"] += 1
    result = Mat2.identity(x.n)
    base = x
    while e:
        if e & 1:
            result = result @ base
        base = base @ base
        e >>= 1
    return result


def commutes(x: Mat2, y: Mat2) -> bool:
    return x @ y == y @ x


def is_scalar_multiple(x: Mat2, y: Mat2) -> int:
    """Return the unit ``mu`` with ``x == mu * y``; raise NoUnit otherwise."""
    x._check(y)
    n = x.n
    for xe, ye in zip(x.entries, y.entries):
        if math.gcd(ye, n) == 1:
            mu = xe * pow(ye, -1, n) % n
            if math.gcd(mu, n) == 1 and y.scale(mu) == x:
                return mu
            raise NoUnit(f"no unit mu with X = mu*Y mod {n}")
    raise NoUnit("Y has no unit entry")


def scalar_ratio(x: Mat2, y: Mat2) -> int:
    """Unit ``k`` with ``x == k * y`` taken at the first unit entry of ``y``.

    Unlike :func:`is_scalar_multiple` the caller decides how to check the
    result; a non-unit entry of ``y`` that shares a factor with n raises
    FactorFound if no unit entry comes first.
    """
    n = x.n
    for xe, ye in zip(x.entries, y.entries):
        g = math.gcd(ye, n)
        if g == 1:
            return xe * pow(ye, -1, n) % n
        if 1 < g < n:
            raise FactorFound(g, n)
    raise NoUnit("Y has no unit entry")


def vec_to_mat(v: Sequence[int], n: int) -> Mat2:
    return Mat2(n, *v)


# ---------------------------------------------------------------------------
# homogeneous systems over Z_n
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinSystem:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(x % self.n for x in r) for r in self.rows))

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 4

    def residual(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(r * x for r, x in zip(row, v)) % self.n for row in self.rows)

    def satisfied_by(self, v: Sequence[int]) -> bool:
        return not any(self.residual(v))

    def pretty(self) -> str:
        w = max((len(str(x)) for r in self.rows for x in r), default=1)
        return "\n".join("[" + " ".join(f"{x:>{w}}" for x in r) + "]" for r in self.rows)


@dataclass(frozen=True)
class NullspaceResult:
    """Solution set of a homogeneous system.

    ``basis`` spans the full solution set over Z_n. With no factor found it
    is a free basis, one vector per free column. When elimination hit a
    non-unit pivot, ``factor`` holds the proper divisor it revealed and the
    basis is a generating set assembled by CRT from the coprime parts of n;
    it is None if n could not be split into coprime parts.
    """

    n: int
    basis: tuple[tuple[int, ...], ...] | None
    factor: int | None = None

    @property
    def dim(self) -> int | None:
        return None if self.basis is None else len(self.basis)


class _NonUnitPivot(Exception):
    def __init__(self, g: int):
        self.g = g


def _rref_nullspace(rows: list[list[int]], ncols: int, n: int) -> list[tuple[int, ...]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = None
        bad = None
        for i in range(r, len(m)):
            v = m[i][col]
            if v == 0:
                continue
            g = math.gcd(v, n)
            if g == 1:
                piv = i
                break
            bad = g
        if piv is None:
            if bad is not None:
                raise _NonUnitPivot(bad)
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][col], -1, n)
        m[r] = [x * inv % n for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % n for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        # free coordinate set to -1 so pivot coordinates read straight off the reduced rows
        v = [0] * ncols
        v[f] = n - 1
        for i, pc in enumerate(pivots):
            v[pc] = m[i][f]
        basis.append(tuple(v))
    return basis


def _coprime_split(n: int, g: int) -> tuple[int, int] | None:
    for d in (g, n // g):
        a, m = 1, n
        t = math.gcd(m, d)
        while t > 1:
            m //= t
            a *= t
            t = math.gcd(m, d)
        if a > 1 and m > 1:
            return a, m
    return None


def _solve(rows: list[list[int]], ncols: int, n: int) -> tuple[list[tuple[int, ...]] | None, int | None]:
    reduced = [[x % n for x in r] for r in rows]
    try:
        return _rref_nullspace(reduced, ncols, n), None
    except _NonUnitPivot as exc:
        g = exc.g
    split = _coprime_split(n, g)
    if split is None:
        return None, g
    n1, n2 = split
    b1, _ = _solve(rows, ncols, n1)
    b2, _ = _solve(rows, ncols, n2)
    if b1 is None or b2 is None:
        return None, g
    # lift each part's generators: v mod n1 and 0 mod n2, and vice versa
    e1 = n2 * pow(n2, -1, n1) % n
    e2 = n1 * pow(n1, -1, n2) % n
    basis = [tuple(x * e1 % n for x in v) for v in b1]
    basis += [tuple(x * e2 % n for x in v) for v in b2]
    return basis, g


def nullspace(sys: LinSystem) -> NullspaceResult:
    OPS["nullspace"] += 1
    basis, factor = _solve([list(r) for r in sys.rows], sys.ncols, sys.n)
    return NullspaceResult(sys.n, None if basis is None else tuple(basis), factor)


def linearize_commutation(left: Mat2, right: Mat2) -> list[tuple[int, int, int, int]]:
    """Rows expressing X·right − left·X ≡ 0 in the unknown entries (a, b, c, d) of X.

    One row per entry of the product, in row-major order.
    """
    n = left.n
    l11, l12, l21, l22 = left.entries
    r11, r12, r21, r22 = right.entries
    rows = [
        (r11 - l11, r21, -l12, 0),
        (r12, r22 - l11, 0, -l12),
        (-l21, 0, r11 - l22, r21),
        (0, -l21, r12, r22 - l22),
    ]
    return [tuple(x % n for x in row) for row in rows]
