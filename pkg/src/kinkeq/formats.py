"""Text formats: matrices, traces, quadratic forms, and the blow-up report.

All numbers are exact ("p" or "p/q", never decimal) and output is
deterministic, so every format round-trips bit-exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import (
    BadRational,
    DegreeError,
    NotSymmetric,
    NotUnimodularForm,
    ParseError,
    SizeMismatch,
    UnknownVariable,
)
from .exact import IntMatrix, SymMatrix, determinant, inertia
from .moves import Congruence, Kink, Move, Trace, Unkink
from .reducer import NEG_DEFINITE, POS_DEFINITE, reduce

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_rational(token: str, lineno: int | None = None) -> Fraction:
    if not _RATIONAL_RE.match(token):
        raise BadRational(f"bad rational {token!r}", line=lineno)
    return Fraction(token)


def _format_rational(x: Fraction) -> str:
    return str(x)  # Fraction prints "p" or "p/q", always in lowest terms


def parse_matrix(text: str) -> SymMatrix:
    """Read the "sym N" format: header, then N rows of N rationals."""
    lines = [
        (no, line.split("#", 1)[0].strip())
        for no, line in enumerate(text.splitlines(), start=1)
    ]
    lines = [(no, line) for no, line in lines if line]
    if not lines:
        raise ParseError("empty matrix file")
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "sym":
        raise ParseError("expected header 'sym N'", line=no)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"bad size {parts[1]!r}", line=no)
    if n < 0:
        raise ParseError("size must be nonnegative", line=no)
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for no, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries, found {len(tokens)}", line=no)
        rows.append([_parse_rational(t, no) for t in tokens])
    try:
        return SymMatrix.from_rows(rows)
    except SizeMismatch as exc:
        raise NotSymmetric(str(exc))


def serialize_matrix(G: SymMatrix) -> str:
    lines = [f"sym {G.n}"]
    for row in G.entries:
        lines.append(" ".join(_format_rational(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_int_matrix(text: str) -> IntMatrix:
    """Read the "int R C" format for rectangular integer matrices."""
    lines = [
        (no, line.split("#", 1)[0].strip())
        for no, line in enumerate(text.splitlines(), start=1)
    ]
    lines = [(no, line) for no, line in lines if line]
    if not lines:
        raise ParseError("empty matrix file")
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "int":
        raise ParseError("expected header 'int R C'", line=no)
    try:
        r, c = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError("bad sizes in header", line=no)
    if r < 0 or c < 0:
        raise ParseError("sizes must be nonnegative", line=no)
    if len(lines) - 1 != r:
        raise ParseError(f"expected {r} rows, found {len(lines) - 1}")
    rows = []
    for no, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != c:
            raise ParseError(f"expected {c} entries, found {len(tokens)}", line=no)
        try:
            rows.append([int(t) for t in tokens])
        except ValueError:
            raise ParseError("entries must be integers", line=no)
    return IntMatrix.from_rows(rows, cols=c)


def serialize_int_matrix(C: IntMatrix) -> str:
    lines = [f"int {C.rows} {C.cols}"]
    for row in C.entries:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def _matrix_inline(G: SymMatrix) -> str:
    if G.n == 0:
        return "empty"
    return ";".join(" ".join(_format_rational(x) for x in row) for row in G.entries)


def _int_matrix_inline(P: IntMatrix) -> str:
    if P.rows == 0:
        return "empty"
    return ";".join(" ".join(str(x) for x in row) for row in P.entries)


def _parse_inline_sym(token: str, lineno: int) -> SymMatrix:
    if token == "empty":
        return SymMatrix.empty()
    rows = [
        [_parse_rational(t, lineno) for t in row.split()]
        for row in token.split(";")
    ]
    try:
        return SymMatrix.from_rows(rows)
    except SizeMismatch as exc:
        raise NotSymmetric(str(exc), line=lineno)


def _parse_inline_int(token: str, lineno: int) -> IntMatrix:
    if token == "empty":
        return IntMatrix.from_rows([], cols=0)
    try:
        rows = [[int(t) for t in row.split()] for row in token.split(";")]
    except ValueError:
        raise ParseError("congruence entries must be integers", line=lineno)
    try:
        return IntMatrix.from_rows(rows)
    except SizeMismatch as exc:
        raise ParseError(str(exc), line=lineno)


def serialize_trace(trace: Trace) -> str:
    """One move per line: "congr rows", "kink s", "unkink s"."""
    lines = ["trace", _matrix_inline(trace.start)]
    for move in trace.moves:
        if isinstance(move, Congruence):
            lines.append(f"congr {_int_matrix_inline(move.matrix)}")
        elif isinstance(move, Kink):
            lines.append(f"kink {move.sign:+d}")
        else:
            lines.append(f"unkink {move.sign:+d}")
    lines.append(f"end {_matrix_inline(trace.end)}")
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> Trace:
    lines = [
        (no, line.split("#", 1)[0].strip())
        for no, line in enumerate(text.splitlines(), start=1)
    ]
    lines = [(no, line) for no, line in lines if line]
    if len(lines) < 3:
        raise ParseError("trace file needs at least 'trace', a start matrix, and 'end'")
    no, first = lines[0]
    if first != "trace":
        raise ParseError("expected literal 'trace' on the first line", line=no)
    no, start_line = lines[1]
    start = _parse_inline_sym(start_line, no)
    moves: list[Move] = []
    end = None
    for no, line in lines[2:]:
        if end is not None:
            raise ParseError("content after the 'end' line", line=no)
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "congr":
            moves.append(Congruence(_parse_inline_int(rest, no)))
        elif keyword in ("kink", "unkink"):
            if rest not in ("+1", "-1"):
                raise ParseError(f"{keyword} sign must be +1 or -1", line=no)
            sign = 1 if rest == "+1" else -1
            moves.append(Kink(sign) if keyword == "kink" else Unkink(sign))
        elif keyword == "end":
            end = _parse_inline_sym(rest, no)
        else:
            raise ParseError(f"unknown move {keyword!r}", line=no)
    if end is None:
        raise ParseError("missing 'end' line")
    return Trace(start, tuple(moves), end)


_TERM_RE = re.compile(r"[+-]?[^+-]+")
_VAR_RE = re.compile(r"^x(\d+)(\^2)?$")
_NUM_RE = re.compile(r"^\d+(/\d+)?$")
_NAME_RE = re.compile(r"^[A-Za-z]\w*(\^\d+)?$")


def parse_quadratic_form(text: str) -> SymMatrix:
    """Gram matrix of a quadratic form in variables x1..xn.

    Terms are c*xi^2 and c*xi*xj with rational c; cross-term coefficients
    are halved, so an odd integer cross-term makes a half-integer entry.
    """
    s = "".join(text.split())
    if not s:
        raise ParseError("empty expression")
    terms = _TERM_RE.findall(s)
    if "".join(terms) != s:
        raise ParseError("malformed expression")
    entries: dict[tuple[int, int], Fraction] = {}
    n = 0
    for term in terms:
        sign = Fraction(1)
        body = term
        if body[0] in "+-":
            if body[0] == "-":
                sign = Fraction(-1)
            body = body[1:]
        if not body:
            raise ParseError("dangling sign")
        coeff = sign
        powers: dict[int, int] = {}
        for factor in body.split("*"):
            if _NUM_RE.match(factor):
                coeff *= Fraction(factor)
                continue
            m = _VAR_RE.match(factor)
            if m:
                idx = int(m.group(1))
                if idx < 1:
                    raise UnknownVariable(f"variables are numbered from x1, got {factor!r}")
                powers[idx] = powers.get(idx, 0) + (2 if m.group(2) else 1)
                continue
            if _NAME_RE.match(factor):
                raise UnknownVariable(f"unknown variable {factor!r}")
            raise ParseError(f"bad factor {factor!r}")
        degree = sum(powers.values())
        if degree != 2:
            raise DegreeError(f"monomial {term!r} has degree {degree}, expected 2")
        vars_ = sorted(powers)
        if len(vars_) == 1:
            i = vars_[0] - 1
            key = (i, i)
        else:
            i, j = vars_[0] - 1, vars_[1] - 1
            key = (i, j)
            coeff = coeff / 2
        entries[key] = entries.get(key, Fraction(0)) + coeff
        n = max(n, max(vars_))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), c in entries.items():
        rows[i][j] += c
        if i != j:
            rows[j][i] += c
    return SymMatrix.from_rows(rows)


def blowup_report(G: SymMatrix) -> str:
    """Arithmetic stabilization report for a unimodular symmetric form.

    States how many stabilizations of each sign make the form congruent to
    a definite form plus identity blocks, and attaches the verifying traces
    produced by ``reduce`` for both targets.
    """
    if not G.is_integral() or determinant(G) not in (1, -1):
        raise NotUnimodularForm("report requires an integer matrix with determinant +1 or -1")
    sig = inertia(G)
    n_plus, n_minus = sig.n_plus, sig.n_minus
    trace_neg = reduce(G, NEG_DEFINITE)
    trace_pos = reduce(G, POS_DEFINITE)
    neg_kinks = sum(1 for m in trace_neg.moves if isinstance(m, Kink))
    pos_kinks = sum(1 for m in trace_pos.moves if isinstance(m, Kink))
    lines = [
        "blow-up arithmetic report",
        f"size n = {G.n}, inertia (n+, n-, n0) = ({n_plus}, {n_minus}, {sig.n_zero}), "
        f"signature = {sig.signature}",
        "",
        f"claim 1: G (+) -I_{4 * n_plus} is congruent to (negative-definite) (+) I_{n_plus}",
        f"  witness: trace to a negative-definite matrix of size {trace_neg.end.n} "
        f"using {neg_kinks} negative kinks (bound {4 * n_plus}) and {n_plus} positive unkinks",
        f"claim 2: G (+) I_{4 * n_minus} is congruent to (positive-definite) (+) -I_{n_minus}",
        f"  witness: trace to a positive-definite matrix of size {trace_pos.end.n} "
        f"using {pos_kinks} positive kinks (bound {4 * n_minus}) and {n_minus} negative unkinks",
        "",
        "--- trace (target neg_definite) ---",
        serialize_trace(trace_neg).rstrip("\n"),
        "--- trace (target pos_definite) ---",
        serialize_trace(trace_pos).rstrip("\n"),
    ]
    return "\n".join(lines) + "\n"
