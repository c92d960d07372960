"""Stabilization moves on symmetric matrices and replayable certificates.

A move is one of:

* ``Congruence(P)`` -- G -> P G P^T for unimodular integer P,
* ``Kink(sign)``    -- G -> G (+) [sign], growing the matrix by one,
* ``Unkink(sign)``  -- strips a trailing [sign] block, shrinking by one.

A ``Trace`` records a start matrix, a move list, and a claimed end matrix;
``verify_trace`` replays it and audits the two quantities every valid move
preserves: nullity and |determinant|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidTrace, KinkEqError, UnkinkShapeViolation
from .exact import (
    Inertia,
    IntMatrix,
    SymMatrix,
    congruence,
    determinant,
    inertia,
)


@dataclass(frozen=True)
class Congruence:
    matrix: IntMatrix


@dataclass(frozen=True)
class Kink:
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise KinkEqError(f"kink sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class Unkink:
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise KinkEqError(f"unkink sign must be +1 or -1, got {self.sign}")


Move = Union[Congruence, Kink, Unkink]


@dataclass(frozen=True)
class Trace:
    start: SymMatrix
    moves: tuple[Move, ...]
    end: SymMatrix


@dataclass(frozen=True)
class StepAudit:
    """Post-move snapshot used by the |det|/nullity audit."""

    index: int  # -1 for the start matrix
    kind: str
    size: int
    inertia: Inertia
    abs_det: Fraction


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    steps: tuple[StepAudit, ...]
    failed_step: int | None = None
    reason: str | None = None


def apply_move(G: SymMatrix, move: Move) -> SymMatrix:
    """Apply one move, checking its preconditions exactly."""
    if isinstance(move, Congruence):
        return congruence(G, move.matrix)
    if isinstance(move, Kink):
        return G.block_sum(move.sign)
    if isinstance(move, Unkink):
        n = G.n
        if n == 0:
            raise UnkinkShapeViolation("cannot unkink the empty matrix")
        if G[n - 1, n - 1] != move.sign:
            raise UnkinkShapeViolation(
                f"trailing diagonal entry is {G[n - 1, n - 1]}, expected {move.sign}"
            )
        if any(G[n - 1, j] != 0 for j in range(n - 1)):
            raise UnkinkShapeViolation("trailing row/column is not zero off the diagonal")
        return SymMatrix(tuple(row[: n - 1] for row in G.entries[: n - 1]))
    raise KinkEqError(f"unknown move {move!r}")


def _kind(move: Move) -> str:
    if isinstance(move, Congruence):
        return "congruence"
    if isinstance(move, Kink):
        return f"kink({move.sign:+d})"
    return f"unkink({move.sign:+d})"


def verify_trace(trace: Trace) -> VerificationReport:
    """Replay a trace, checking every move precondition and the end matrix.

    Never raises on a well-formed Trace value; failures are reported with
    the first bad step index.  Each audit entry records inertia and |det|
    after the step; both nullity and |det| are constant along valid traces.
    """
    current = trace.start
    steps = [StepAudit(-1, "start", current.n, inertia(current), abs(determinant(current)))]
    for i, move in enumerate(trace.moves):
        try:
            current = apply_move(current, move)
        except KinkEqError as exc:
            return VerificationReport(
                False, tuple(steps), failed_step=i, reason=f"{type(exc).__name__}: {exc}"
            )
        steps.append(StepAudit(i, _kind(move), current.n, inertia(current), abs(determinant(current))))
    if current != trace.end:
        return VerificationReport(
            False,
            tuple(steps),
            failed_step=len(trace.moves),
            reason="replayed matrix differs from the recorded end matrix",
        )
    return VerificationReport(True, tuple(steps))


@dataclass(frozen=True)
class MoveStats:
    pos_kinks: int
    neg_kinks: int
    pos_unkinks: int
    neg_unkinks: int
    congruences: int


def trace_stats(trace: Trace) -> MoveStats:
    """Exact move counts by kind; the trace must verify."""
    report = verify_trace(trace)
    if not report.valid:
        raise InvalidTrace(f"step {report.failed_step}: {report.reason}")
    pos_k = neg_k = pos_u = neg_u = congr = 0
    for move in trace.moves:
        if isinstance(move, Congruence):
            congr += 1
        elif isinstance(move, Kink):
            if move.sign > 0:
                pos_k += 1
            else:
                neg_k += 1
        else:
            if move.sign > 0:
                pos_u += 1
            else:
                neg_u += 1
    return MoveStats(pos_k, neg_k, pos_u, neg_u, congr)
