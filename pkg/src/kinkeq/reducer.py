"""Constructive reduction to definite and semidefinite representatives.

One elimination round removes a single positive eigenvalue:

1. congruence moving a primitive vector b with b^T G b > 0 into the first
   coordinate, so the corner entry k = b^T G b is positive;
2. (rational input only) an integralization congruence, at the cost of one
   extra negative kink, making the first row integral;
3. write k - 1 as a sum of at most four squares, add one negative kink per
   nonzero square, and fold them into the corner with a shear, leaving a 1;
4. clear the first row/column with the 1, rotate it to the back, and strip
   it with a positive unkink.

Iterating drives the positive index to zero; positive targets run the same
machinery on -G and flip the signs of every kink and unkink in the result.
Per eliminated eigenvalue the round spends at most four negative kinks
(five for rational input) and exactly one positive unkink.
"""

from __future__ import annotations

from math import isqrt, lcm

from .errors import (
    NonpositiveCorner,
    NoPositiveEigenvalue,
    SingularForDefiniteTarget,
    KinkEqError,
)
from .exact import (
    IntMatrix,
    SymMatrix,
    congruence as apply_congruence,
    determinant,
    diagonalizing_congruence,
    evaluate_form,
    extend_primitive,
    inertia,
    primitive_scale,
    require_integral,
)
from .moves import Congruence, Kink, Move, Trace, Unkink, apply_move

NEG_DEFINITE = "neg_definite"
POS_DEFINITE = "pos_definite"
NEG_SEMIDEFINITE = "neg_semidefinite"
POS_SEMIDEFINITE = "pos_semidefinite"
TARGETS = (NEG_DEFINITE, POS_DEFINITE, NEG_SEMIDEFINITE, POS_SEMIDEFINITE)


def four_squares(k: int) -> tuple[int, int, int, int]:
    """Write k >= 0 as a^2 + b^2 + c^2 + d^2 with a >= b >= c >= d >= 0.

    Returns the lexicographically greatest such tuple, found by descending
    search on (a, b, c); existence is classical, so the search always hits.
    """
    if k < 0:
        raise KinkEqError(f"four_squares needs a nonnegative integer, got {k}")
    for a in range(isqrt(k), -1, -1):
        r1 = k - a * a
        for b in range(min(a, isqrt(r1)), -1, -1):
            r2 = r1 - b * b
            for c in range(min(b, isqrt(r2)), -1, -1):
                r3 = r2 - c * c
                d = isqrt(r3)
                if d * d == r3 and d <= c:
                    return (a, b, c, d)
    raise AssertionError("unreachable: every nonnegative integer is a sum of four squares")


def find_positive_vector(G: SymMatrix) -> tuple[int, ...]:
    """A primitive integer b with b^T G b > 0.

    Deterministic search order: diagonal entries, then e_i +/- e_j sweeps,
    then an exact witness read off from a congruence diagonalization
    L G L^T = D.  Any row i of L with D_ii > 0 satisfies u G u^T = D_ii > 0,
    so this stage always succeeds when the matrix has a positive
    eigenvalue, with polynomially bounded entry sizes.
    """
    n = G.n
    for i in range(n):
        if G[i, i] > 0:
            return tuple(1 if t == i else 0 for t in range(n))
    for i in range(n):
        for j in range(i + 1, n):
            for s in (1, -1):
                if G[i, i] + 2 * s * G[i, j] + G[j, j] > 0:
                    return tuple(
                        1 if t == i else (s if t == j else 0) for t in range(n)
                    )
    diag, L = diagonalizing_congruence(G)
    for i, d in enumerate(diag):
        if d > 0:
            return _shrink_positive_vector(G, primitive_scale(L[i]))
    raise NoPositiveEigenvalue("matrix has no positive eigenvalue")


def _shrink_positive_vector(G: SymMatrix, b: tuple[int, ...]) -> tuple[int, ...]:
    """Coordinate-descend b toward the origin while keeping b^T G b > 0.

    The form is quadratic in each coordinate, so along coordinate i the
    feasible values around b_i form an interval; binary search finds the
    entry of least magnitude in it.  Each accepted step strictly decreases
    sum(|b_i|), so the sweep terminates.  This keeps the corner entry (and
    everything downstream of it) small even when the diagonalization
    witness has large entries.
    """
    n = G.n
    u = list(b)
    value = evaluate_form(G, u)  # maintained incrementally across steps
    changed = True
    passes = 0
    while changed and passes < 32:
        passes += 1
        changed = False
        for i in range(n):
            if u[i] == 0:
                continue
            # along coordinate i the form is q(t) = a*t^2 + 2*s*t + c
            a = G[i, i]
            s = sum(G[i, j] * u[j] for j in range(n) if j != i)
            x = u[i]
            c = value - a * x * x - 2 * s * x

            def q(t):
                return a * t * t + 2 * s * t + c

            if c > 0:
                best = 0
            else:
                lo, hi = 0, x  # q(hi) = value > 0, q(lo) = c <= 0
                while abs(hi - lo) > 1:
                    mid = (lo + hi) // 2
                    if q(mid) > 0:
                        hi = mid
                    else:
                        lo = mid
                best = hi
            if best != x:
                u[i] = best
                value = q(best)
                changed = True
    return primitive_scale(u)


def integralize_first_row(G: SymMatrix) -> tuple[SymMatrix, list[Move]]:
    """Make the first row integral at the cost of one negative kink.

    For corner k/d with d the lcm of the first-row denominators, kinks by
    [-1] and applies the determinant-1 congruence with rows (d, 0.., 1) /
    identity / (d-1, 0.., 1); the new corner d*k - 1 is a positive integer.
    No-op when the first row is already integral.
    """
    n = G.n
    if n == 0 or G[0, 0] <= 0:
        raise NonpositiveCorner(f"top-left entry must be positive, got {'0x0 matrix' if n == 0 else G[0, 0]}")
    d = lcm(*[G[0, j].denominator for j in range(n)])
    if d == 1:
        return G, []
    moves: list[Move] = [Kink(-1)]
    p_rows = [[0] * (n + 1) for _ in range(n + 1)]
    p_rows[0][0] = d
    p_rows[0][n] = 1
    for i in range(1, n):
        p_rows[i][i] = 1
    p_rows[n][0] = d - 1
    p_rows[n][n] = 1
    moves.append(Congruence(IntMatrix.from_rows(p_rows)))
    out = G
    for move in moves:
        out = apply_move(out, move)
    return out, moves


def _elimination_round(G: SymMatrix) -> tuple[SymMatrix, list[Move]]:
    """One round: n_plus drops by exactly one; at most 4 negative kinks
    (5 for rational input) and exactly one positive unkink."""
    moves: list[Move] = []
    n = G.n
    b = find_positive_vector(G)
    if b != tuple(1 if t == 0 else 0 for t in range(n)):
        P = extend_primitive(b).transpose()  # first row b, so corner = b^T G b
        moves.append(Congruence(P))
        G = apply_congruence(G, P)

    G, int_moves = integralize_first_row(G)
    moves.extend(int_moves)
    n = G.n

    k = int(G[0, 0])
    squares = [s for s in four_squares(k - 1) if s != 0]
    for _ in squares:
        moves.append(Kink(-1))
        G = G.block_sum(-1)
    if squares:
        m = n + len(squares)
        p_rows = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
        for t, s in enumerate(squares):
            p_rows[0][n + t] = s
        P = IntMatrix.from_rows(p_rows)
        moves.append(Congruence(P))
        G = apply_congruence(G, P)
        n = m
    assert G[0, 0] == 1

    w = [int(G[0, j]) for j in range(1, n)]
    if any(w):
        p_rows = [[1] + [0] * (n - 1)]
        for i in range(1, n):
            row = [-w[i - 1]] + [1 if j == i else 0 for j in range(1, n)]
            p_rows.append(row)
        P = IntMatrix.from_rows(p_rows)
        moves.append(Congruence(P))
        G = apply_congruence(G, P)
    if n > 1:
        # cyclic permutation sending coordinate 0 to the back
        p_rows = [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n - 1)]
        p_rows.append([1] + [0] * (n - 1))
        P = IntMatrix.from_rows(p_rows)
        moves.append(Congruence(P))
        G = apply_congruence(G, P)
    moves.append(Unkink(1))
    G = apply_move(G, Unkink(1))
    return G, moves


def eliminate_positive(G: SymMatrix) -> tuple[SymMatrix, list[Move]]:
    """One elimination round on an integer matrix with n_plus >= 1."""
    require_integral(G)
    return _elimination_round(G)


def _flip(move: Move) -> Move:
    if isinstance(move, Kink):
        return Kink(-move.sign)
    if isinstance(move, Unkink):
        return Unkink(-move.sign)
    return move


def reduce(G: SymMatrix, target: str) -> Trace:
    """Reduce G to a representative of the requested definiteness class.

    Definite targets require a nonsingular input.  The returned trace
    verifies, preserves nullity and |det|, and for negative targets uses at
    most 4*n_plus(G) negative kinks (5*n_plus for non-integral G) and
    exactly n_plus(G) positive unkinks; symmetrically for positive targets.
    """
    if target not in TARGETS:
        raise KinkEqError(f"unknown target {target!r}")
    if target in (POS_DEFINITE, POS_SEMIDEFINITE):
        mirror = NEG_DEFINITE if target == POS_DEFINITE else NEG_SEMIDEFINITE
        dual = reduce(G.neg(), mirror)
        return Trace(G, tuple(_flip(m) for m in dual.moves), dual.end.neg())

    if target == NEG_DEFINITE and determinant(G) == 0:
        raise SingularForDefiniteTarget("definite targets need a nonsingular matrix")

    start_inertia = inertia(G)
    moves: list[Move] = []
    current = G
    for _ in range(start_inertia.n_plus):
        current, round_moves = _elimination_round(current)
        moves.extend(round_moves)
    trace = Trace(G, tuple(moves), current)

    kink_budget = (4 if G.is_integral() else 5) * start_inertia.n_plus
    neg_kinks = sum(1 for m in moves if isinstance(m, Kink) and m.sign == -1)
    pos_unkinks = sum(1 for m in moves if isinstance(m, Unkink) and m.sign == 1)
    if neg_kinks > kink_budget or pos_unkinks != start_inertia.n_plus:
        raise AssertionError(
            f"move bound violated: {neg_kinks} kinks (budget {kink_budget}), "
            f"{pos_unkinks} unkinks (expected {start_inertia.n_plus})"
        )
    return trace
