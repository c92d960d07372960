"""Hand-encoded kink-equivalence chains used as verifier fixtures.

These traces are written out move by move (rather than produced by
``reduce``) so the verifier can replay them as independent certificates.
Permutation congruences are separate moves throughout: unkinking only ever
strips the trailing coordinate.
"""

from __future__ import annotations

from .exact import IntMatrix, SymMatrix
from .moves import Congruence, Kink, Move, Trace, Unkink, apply_move

# 6x6 positive-definite matrix that is not a Gram product of any integer
# matrix, yet reduces to [[-2,-1],[-1,-2]]; |det| = 3.
OBSTRUCTED_GRAM_MATRIX = SymMatrix.from_rows(
    [
        [2, 1, 1, 1, 0, 0],
        [1, 2, 1, 1, 1, 0],
        [1, 1, 2, 1, 1, 1],
        [1, 1, 1, 2, 1, 1],
        [0, 1, 1, 1, 2, 1],
        [0, 0, 1, 1, 1, 2],
    ]
)


def _congr(rows) -> Congruence:
    return Congruence(IntMatrix.from_rows(rows))


def _identity_with(n: int, updates: dict[tuple[int, int], int]) -> list[list[int]]:
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for (i, j), v in updates.items():
        rows[i][j] = v
    return rows


def _cycle_front_to_back(n: int) -> list[list[int]]:
    rows = [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n - 1)]
    rows.append([1] + [0] * (n - 1))
    return rows


def _clear_first(n: int, w: list[int]) -> list[list[int]]:
    """[[1, 0], [-w, I]]: use a unit corner to clear the first row/column."""
    rows = [[1] + [0] * (n - 1)]
    for i in range(1, n):
        rows.append([-w[i - 1]] + [1 if j == i else 0 for j in range(1, n)])
    return rows


def _finish(start: SymMatrix, moves: list[Move]) -> Trace:
    current = start
    for move in moves:
        current = apply_move(current, move)
    return Trace(start, tuple(moves), current)


def five_to_minus_five_trace() -> Trace:
    """[5] to [-5]: one negative kink, two congruences, one positive unkink."""
    start = SymMatrix.from_rows([[5]])
    moves: list[Move] = [
        Kink(-1),
        _congr([[1, 2], [0, 1]]),      # diag(5,-1) -> [[1,-2],[-2,-1]]
        _congr([[-2, -1], [-1, 0]]),   # -> diag(-5, 1)
        Unkink(1),
    ]
    return _finish(start, moves)


def obstructed_matrix_reduction_trace() -> Trace:
    """The thirteen-stage chain taking OBSTRUCTED_GRAM_MATRIX down to
    [[-2,-1],[-1,-2]], with every permutation factor as its own move."""
    moves: list[Move] = []

    # stage 1: negative kink, then fold it into the corner
    moves.append(Kink(-1))
    moves.append(_congr(_identity_with(7, {(0, 6): 1})))
    # stage 2: clear the first row/column with the corner 1, rotate, unkink
    v2 = [1, 1, 1, 0, 0, -1]
    moves.append(_congr(_clear_first(7, v2)))
    moves.append(_congr(_cycle_front_to_back(7)))
    moves.append(Unkink(1))
    # stage 3: block-clear a 3x3 identity corner, swap blocks, triple unkink
    c6 = [[1, 1, 1], [0, 1, 1], [1, 1, 1]]
    block_clear = [
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [-1, -1, -1, 1, 0, 0],
        [0, -1, -1, 0, 1, 0],
        [-1, -1, -1, 0, 0, 1],
    ]
    assert [[-row[j] for j in range(3)] for row in block_clear[3:]] == c6
    moves.append(_congr(block_clear))
    block_swap = [
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
    ]
    moves.append(_congr(block_swap))
    moves.extend([Unkink(1), Unkink(1), Unkink(1)])
    # stage 4: shear a unit into the corner, transpose the top pair
    moves.append(_congr([[1, 0, 0], [-1, 1, 0], [-3, 0, 1]]))
    moves.append(_congr([[0, 1, 0], [1, 0, 0], [0, 0, 1]]))
    # stage 5: clear, rotate, unkink
    v7 = [0, 1]
    moves.append(_congr(_clear_first(3, v7)))
    moves.append(_congr(_cycle_front_to_back(3)))
    moves.append(Unkink(1))
    # stage 6: swap to put 3 in the corner, add a negative kink
    moves.append(_congr([[0, 1], [1, 0]]))
    moves.append(Kink(-1))
    # stage 7: fold both negative kinks into the corner
    moves.append(_congr([[1, 1, 1], [0, 1, 0], [0, 0, 1]]))
    # stage 8: clear, rotate, final unkink
    v11 = [-1, -1]
    moves.append(_congr(_clear_first(3, v11)))
    moves.append(_congr(_cycle_front_to_back(3)))
    moves.append(Unkink(1))

    return _finish(OBSTRUCTED_GRAM_MATRIX, moves)
