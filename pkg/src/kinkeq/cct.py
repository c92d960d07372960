"""Gram-factor toolkit: CC^T searches, the I+CC^T chain, and 2x2 forms."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import isqrt

from .errors import (
    Not2x2,
    NotPositiveDefinite,
    NotPositiveSemidefinite,
)
from .exact import (
    IntMatrix,
    SymMatrix,
    inertia,
    require_integral,
)
from .moves import Congruence, Kink, Move, Trace, Unkink, apply_move


@dataclass(frozen=True)
class GramFactor:
    """Integer C with CC^T equal to some target Gram matrix.

    Columns are kept canonical: zero columns dropped, the first nonzero
    entry of every column positive, columns sorted lexicographically
    descending.  Canonicalization never changes CC^T.
    """

    matrix: IntMatrix

    @classmethod
    def from_matrix(cls, C: IntMatrix) -> "GramFactor":
        cols = []
        for j in range(C.cols):
            col = C.column(j)
            lead = next((x for x in col if x != 0), 0)
            if lead == 0:
                continue
            if lead < 0:
                col = tuple(-x for x in col)
            cols.append(col)
        cols.sort(reverse=True)
        rows = tuple(tuple(col[i] for col in cols) for i in range(C.rows))
        return cls(IntMatrix(C.rows, len(cols), rows))

    def gram(self) -> SymMatrix:
        product = self.matrix.matmul(self.matrix.transpose())
        return SymMatrix.from_rows(product.entries)


def icct_trace(C: IntMatrix) -> Trace:
    """Kink-equivalence from I + CC^T down to -(I + C^T C).

    For n x m C: m negative kinks, the two block shears
    [[I, C], [0, I]] and [[I, 0], [C^T, I]], a block rotation putting the
    surviving identity block last, and n positive unkinks.
    """
    n, m = C.rows, C.cols
    ct = C.transpose()
    cct = C.matmul(ct)
    start = SymMatrix.from_rows(
        [
            [cct.entries[i][j] + (1 if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
    )
    moves: list[Move] = []
    current = start
    for _ in range(m):
        moves.append(Kink(-1))
        current = current.block_sum(-1)

    def block_shear(top_right: IntMatrix | None, bottom_left: IntMatrix | None) -> IntMatrix:
        size = n + m
        rows = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
        if top_right is not None:
            for i in range(n):
                for j in range(m):
                    rows[i][n + j] = top_right.entries[i][j]
        if bottom_left is not None:
            for i in range(m):
                for j in range(n):
                    rows[n + i][j] = bottom_left.entries[i][j]
        return IntMatrix.from_rows(rows, cols=size)

    for P in (block_shear(C, None), block_shear(None, ct)):
        if any(P.entries[i][j] != (1 if i == j else 0) for i in range(n + m) for j in range(n + m)):
            moves.append(Congruence(P))
            current = apply_move(current, moves[-1])

    if n > 0 and m > 0:
        # rotate the leading I_n block to the back so it can be unkinked
        size = n + m
        rows = [[0] * size for _ in range(size)]
        for i in range(m):
            rows[i][n + i] = 1
        for i in range(n):
            rows[m + i][i] = 1
        moves.append(Congruence(IntMatrix.from_rows(rows, cols=size)))
        current = apply_move(current, moves[-1])

    for _ in range(n):
        moves.append(Unkink(1))
        current = apply_move(current, moves[-1])

    ctc = ct.matmul(C)
    end = SymMatrix.from_rows(
        [
            [-(ctc.entries[i][j] + (1 if i == j else 0)) for j in range(m)]
            for i in range(m)
        ]
    )
    assert current == end
    return Trace(start, tuple(moves), end)


def cct_search(G: SymMatrix, rng: random.Random | None = None) -> GramFactor | None:
    """Exhaustive canonical search for integer C with CC^T = G.

    Rows of C are filled in order; every column's entries are bounded by
    sqrt of the corresponding diagonal entry, and each nonzero column adds
    at least 1 to trace(CC^T), so trace(G) columns suffice and the search
    space is finite.  Signed column permutations are quotiented out by
    requiring entries to be non-increasing inside blocks of columns with
    equal prefixes and nonnegative where the prefix is all zero, which
    makes the first solution found canonical.  ``rng`` only shuffles the
    branch order (used for completeness cross-checks); the search stays
    exhaustive either way.
    """
    require_integral(G)
    sig = inertia(G)
    if sig.n_minus > 0:
        raise NotPositiveSemidefinite("matrix has a negative eigenvalue")
    n = G.n
    m = sum(int(G[i, i]) for i in range(n))
    rows: list[tuple[int, ...]] = []

    def row_candidates(i: int):
        """Yield canonical rows x with |x| bounded, sum x^2 = G_ii and
        x . rows[r] = G_ir for all r < i."""
        target_norm = int(G[i, i])
        bound = isqrt(target_norm)
        targets = [int(G[i, r]) for r in range(i)]
        # suffix squared norms of earlier rows, for a Cauchy-Schwarz prune
        suffix = [
            [0] * (m + 1)
            for _ in range(i)
        ]
        for r in range(i):
            for j in range(m - 1, -1, -1):
                suffix[r][j] = suffix[r][j + 1] + rows[r][j] ** 2
        x = [0] * m

        def rec(j: int, norm_left: int, dots: list[int]):
            if j == m:
                if norm_left == 0 and all(d == t for d, t in zip(dots, targets)):
                    yield tuple(x)
                return
            if norm_left > (m - j) * bound * bound:
                return
            for r in range(i):
                gap = targets[r] - dots[r]
                if gap * gap > norm_left * suffix[r][j]:
                    return
            lo, hi = -bound, bound
            if all(rows[r][j] == 0 for r in range(i)):
                lo = 0  # sign normalization: first nonzero entry positive
            if j > 0 and all(rows[r][j] == rows[r][j - 1] for r in range(i)):
                hi = min(hi, x[j - 1])  # equal prefixes: non-increasing
            values = [v for v in range(hi, lo - 1, -1) if v * v <= norm_left]
            if rng is not None:
                rng.shuffle(values)
            for v in values:
                x[j] = v
                yield from rec(
                    j + 1,
                    norm_left - v * v,
                    [d + v * rows[r][j] for r, d in enumerate(dots)],
                )
            x[j] = 0

        yield from rec(0, target_norm, [0] * i)

    def fill(i: int) -> GramFactor | None:
        if i == n:
            C = IntMatrix.from_rows(rows, cols=m)
            return GramFactor.from_matrix(C)
        for candidate in row_candidates(i):
            rows.append(candidate)
            found = fill(i + 1)
            if found is not None:
                return found
            rows.pop()
        return None

    return fill(0)


def reduce_binary_form(A: SymMatrix) -> tuple[SymMatrix, IntMatrix]:
    """Gauss-reduce a positive-definite 2x2 integer matrix.

    Returns (A', E) with A = E A' E^T, E unimodular, and A' = [[a, b], [b, c]]
    satisfying |b| <= a <= c and b >= 0 whenever a = |b| or a = c.
    """
    if A.n != 2:
        raise Not2x2(f"expected a 2x2 matrix, got {A.n}x{A.n}")
    require_integral(A)
    a, b, c = int(A[0, 0]), int(A[0, 1]), int(A[1, 1])
    if a <= 0 or a * c - b * b <= 0:
        raise NotPositiveDefinite("matrix is not positive-definite")

    e = [[1, 0], [0, 1]]  # accumulates A = E A' E^T

    def absorb(s00, s01, s10, s11):
        """Apply the congruence step S (A' <- S A' S^T, E <- E S^{-1})."""
        nonlocal a, b, c
        na = s00 * (s00 * a + s01 * b) + s01 * (s00 * b + s01 * c)
        nb = s10 * (s00 * a + s01 * b) + s11 * (s00 * b + s01 * c)
        nc = s10 * (s10 * a + s11 * b) + s11 * (s10 * b + s11 * c)
        a, b, c = na, nb, nc
        det = s00 * s11 - s01 * s10
        i00, i01, i10, i11 = s11 * det, -s01 * det, -s10 * det, s00 * det
        e[0][0], e[0][1] = e[0][0] * i00 + e[0][1] * i10, e[0][0] * i01 + e[0][1] * i11
        e[1][0], e[1][1] = e[1][0] * i00 + e[1][1] * i10, e[1][0] * i01 + e[1][1] * i11

    while True:
        if a > c:
            absorb(0, 1, 1, 0)
            continue
        if 2 * abs(b) > a:
            # shift b by the nearest multiple of a (ties toward b > 0)
            t = (2 * b + a) // (2 * a)
            if 2 * (b - t * a) == -a:
                t -= 1
            absorb(1, 0, -t, 1)
            continue
        break
    if b < 0 and (a == -b or a == c):
        absorb(1, 0, 0, -1)

    assert abs(b) <= a <= c and not (b < 0 and (a == abs(b) or a == c))
    reduced = SymMatrix.from_rows([[a, b], [b, c]])
    return reduced, IntMatrix.from_rows(e, cols=2)


def cct_2x2(A: SymMatrix) -> GramFactor:
    """Explicit Gram factor of a positive-definite 2x2 integer matrix.

    On the reduced form [[a, b], [b, c]] take a - |b| columns e_1, c - |b|
    columns e_2, and |b| columns (1, sgn b); pull back along the reducing
    congruence.
    """
    reduced, E = reduce_binary_form(A)
    a, b, c = int(reduced[0, 0]), int(reduced[0, 1]), int(reduced[1, 1])
    cols = (
        [(1, 0)] * (a - abs(b))
        + [(0, 1)] * (c - abs(b))
        + [(1, 1 if b > 0 else -1)] * abs(b)
    )
    Cprime = IntMatrix.from_rows(
        [[col[0] for col in cols], [col[1] for col in cols]], cols=len(cols)
    )
    return GramFactor.from_matrix(E.matmul(Cprime))
