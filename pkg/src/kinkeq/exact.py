"""Exact matrices over the rationals and the congruence toolkit.

Everything here is pure and immutable: matrices are tuples of tuples of
``fractions.Fraction`` (symmetric case) or ``int`` (rectangular case), so
values can be shared freely across threads.  The 0x0 matrix is a legitimate
value throughout, with determinant 1 and inertia (0, 0, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import (
    NotIntegerMatrix,
    NotPrimitive,
    NotUnimodular,
    SizeMismatch,
    ZeroVector,
)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


@dataclass(frozen=True)
class IntMatrix:
    """Rectangular integer matrix; no symmetry assumed."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if data:
            cols = len(data[0])
            if any(len(row) != cols for row in data):
                raise SizeMismatch("ragged rows")
        elif cols is None:
            cols = 0
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n
        )

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise SizeMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        data = tuple(
            tuple(
                sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            )
            for i in range(self.rows)
        )
        return IntMatrix(self.rows, other.cols, data)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))


@dataclass(frozen=True)
class SymMatrix:
    """Symmetric matrix over exact rationals, size n >= 0."""

    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> "SymMatrix":
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(data)
        if any(len(row) != n for row in data):
            raise SizeMismatch("matrix is not square")
        for i in range(n):
            for j in range(i):
                if data[i][j] != data[j][i]:
                    raise SizeMismatch(f"entries ({i},{j}) and ({j},{i}) differ")
        return cls(data)

    @classmethod
    def diagonal(cls, values: Sequence) -> "SymMatrix":
        n = len(values)
        return cls.from_rows(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @classmethod
    def empty(cls) -> "SymMatrix":
        return cls(())

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def block_sum(self, value) -> "SymMatrix":
        """Direct sum with the 1x1 block [value]."""
        v = Fraction(value)
        zero = Fraction(0)
        rows = [row + (zero,) for row in self.entries]
        rows.append(tuple(zero for _ in range(self.n)) + (v,))
        return SymMatrix(tuple(rows))

    def neg(self) -> "SymMatrix":
        return SymMatrix(tuple(tuple(-x for x in row) for row in self.entries))


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, negative, and zero eigenvalues."""

    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus


def det_int(rows: int, entries: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Bareiss one-step algorithm: all intermediate values are exact integers
    (minors of the input), so there is no rational blow-up.
    """
    n = rows
    if n == 0:
        return 1
    a = [list(row) for row in entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant(G: SymMatrix) -> Fraction:
    """Exact determinant via Bareiss on a common-denominator integer lift."""
    n = G.n
    if n == 0:
        return Fraction(1)
    d = lcm(*[x.denominator for row in G.entries for x in row])
    lift = [[int(x * d) for x in row] for row in G.entries]
    return Fraction(det_int(n, lift), d**n)


def is_unimodular(P: IntMatrix) -> bool:
    """True iff P is square with determinant +1 or -1."""
    if P.rows != P.cols:
        return False
    return det_int(P.rows, P.entries) in (1, -1)


def _sym_diagonalize(G: SymMatrix, track: bool):
    """Congruence-diagonalize G exactly; returns (diagonal, L or None).

    When the trailing block has an all-zero diagonal but a nonzero
    off-diagonal entry, adding one row/column into another creates a
    nonzero pivot (2*g_ij), so the sweep always terminates.  With
    ``track`` the rational transform L with L G L^T = diag is returned.
    """
    n = G.n
    m = [list(row) for row in G.entries]
    L = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)] if track else None

    def swap(i, j):
        m[i], m[j] = m[j], m[i]
        for row in m:
            row[i], row[j] = row[j], row[i]
        if L is not None:
            L[i], L[j] = L[j], L[i]

    def add_into(i, j):
        for k in range(n):
            m[i][k] = m[i][k] + m[j][k]
        for k in range(n):
            m[k][i] = m[k][i] + m[k][j]
        if L is not None:
            for k in range(n):
                L[i][k] = L[i][k] + L[j][k]

    p = 0
    while p < n:
        if m[p][p] == 0:
            pivot_row = next((q for q in range(p + 1, n) if m[q][q] != 0), None)
            if pivot_row is not None:
                swap(p, pivot_row)
            else:
                off = next(
                    ((i, j) for i in range(p, n) for j in range(i + 1, n) if m[i][j] != 0),
                    None,
                )
                if off is None:
                    break  # trailing block is zero
                i, j = off
                add_into(i, j)  # m[i][i] becomes 2*m[i][j] != 0
                if i != p:
                    swap(p, i)
        pivot = m[p][p]
        for i in range(p + 1, n):
            f = m[i][p] / pivot
            if f == 0:
                continue
            for j in range(p + 1, n):
                m[i][j] -= f * m[p][j]
            if L is not None:
                for j in range(n):
                    L[i][j] -= f * L[p][j]
        for i in range(p + 1, n):
            m[p][i] = m[i][p] = Fraction(0)
        p += 1
    return [m[i][i] for i in range(n)], L


def inertia(G: SymMatrix) -> Inertia:
    """Eigenvalue sign counts, by Sylvester's law applied to an exact
    congruence diagonalization."""
    diag, _ = _sym_diagonalize(G, track=False)
    n_plus = sum(1 for d in diag if d > 0)
    n_minus = sum(1 for d in diag if d < 0)
    return Inertia(n_plus, n_minus, G.n - n_plus - n_minus)


def diagonalizing_congruence(G: SymMatrix) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Exact diagonal D and rational L with L G L^T = diag(D).

    Row i of L is a witness direction: (row i) G (row i)^T = D[i].
    """
    diag, L = _sym_diagonalize(G, track=True)
    return diag, L


def congruence(G: SymMatrix, P: IntMatrix) -> SymMatrix:
    """Return P G P^T for unimodular P of the same size as G."""
    if P.rows != P.cols or P.rows != G.n:
        raise SizeMismatch(f"P is {P.rows}x{P.cols}, G is {G.n}x{G.n}")
    if not is_unimodular(P):
        raise NotUnimodular(f"det(P) = {det_int(P.rows, P.entries)}")
    n = G.n
    pg = [
        [sum(P.entries[i][k] * G.entries[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    rows = [
        [sum(pg[i][k] * P.entries[j][k] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    return SymMatrix(tuple(tuple(Fraction(x) for x in row) for row in rows))


def extend_primitive(b: Sequence[int]) -> IntMatrix:
    """Extend a primitive integer vector to a unimodular matrix.

    Returns unimodular P with first column b.  Construction: reduce b to e_1
    by elementary integer row operations (extended-gcd pairs), accumulating
    the inverse of each step, so P carries an explicit certificate.
    """
    b = [int(x) for x in b]
    n = len(b)
    if n == 0 or all(x == 0 for x in b):
        raise ZeroVector("cannot extend the zero vector")
    g = 0
    for x in b:
        g = gcd(g, x)
    if g != 1:
        raise NotPrimitive(f"gcd of entries is {g}")

    p = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    lead = b[0]
    for i in range(1, n):
        if b[i] == 0:
            continue
        g, x, y = _egcd(lead, b[i])
        # row step E = [[x, y], [-b[i]/g, lead/g]] on coords (0, i) sends
        # (lead, b[i]) -> (g, 0); accumulate its inverse on the right of P.
        inv00, inv01 = lead // g, -y
        inv10, inv11 = b[i] // g, x
        for r in range(n):
            c0, ci = p[r][0], p[r][i]
            p[r][0] = c0 * inv00 + ci * inv10
            p[r][i] = c0 * inv01 + ci * inv11
        lead = g
        b[i] = 0
    if lead == -1:
        for r in range(n):
            p[r][0] = -p[r][0]
        lead = 1
    assert lead == 1
    return IntMatrix.from_rows(p, cols=n)


def primitive_scale(u: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector.

    Multiplies by the lcm of the denominators, then divides by the gcd of
    the resulting entries.  The scale factor is positive, so sign(b^T G b)
    matches sign(u^T G u) for every G.
    """
    v = [Fraction(x) for x in u]
    if not v or all(x == 0 for x in v):
        raise ZeroVector("cannot normalize the zero vector")
    d = lcm(*[x.denominator for x in v])
    ints = [int(x * d) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def evaluate_form(G: SymMatrix, v: Sequence) -> Fraction:
    """The quadratic value v^T G v."""
    if len(v) != G.n:
        raise SizeMismatch("vector length does not match matrix size")
    vv = [Fraction(x) for x in v]
    return sum(
        (vv[i] * G.entries[i][j] * vv[j] for i in range(G.n) for j in range(G.n)),
        Fraction(0),
    )


def require_integral(G: SymMatrix) -> None:
    if not G.is_integral():
        raise NotIntegerMatrix("matrix has non-integer entries")
