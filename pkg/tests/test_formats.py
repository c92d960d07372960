"""Text formats: matrices, traces, quadratic forms, blow-up report."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kinkeq import IntMatrix, SymMatrix, inertia, verify_trace
from kinkeq.errors import (
    BadRational,
    DegreeError,
    NotSymmetric,
    NotUnimodularForm,
    ParseError,
    UnknownVariable,
)
from kinkeq.formats import (
    blowup_report,
    parse_int_matrix,
    parse_matrix,
    parse_quadratic_form,
    parse_trace,
    serialize_int_matrix,
    serialize_matrix,
    serialize_trace,
)
from kinkeq.worked_examples import (
    five_to_minus_five_trace,
    obstructed_matrix_reduction_trace,
)

from oracles import random_sym_rational


class TestMatrixFormat:
    def test_basic(self):
        assert parse_matrix("sym 2\n5 3\n3 6\n") == SymMatrix.from_rows([[5, 3], [3, 6]])

    def test_rational(self):
        assert parse_matrix("sym 1\n1/2\n") == SymMatrix.from_rows([[Fraction(1, 2)]])

    def test_rejects_asymmetric(self):
        with pytest.raises(NotSymmetric):
            parse_matrix("sym 2\n1 2\n3 4\n")

    def test_rejects_bad_rational(self):
        with pytest.raises(BadRational) as exc:
            parse_matrix("sym 1\n0.5\n")
        assert exc.value.line == 2

    def test_rejects_bad_header(self):
        with pytest.raises(ParseError):
            parse_matrix("matrix 2\n1 0\n0 1\n")
        with pytest.raises(ParseError):
            parse_matrix("")

    def test_rejects_row_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_matrix("sym 2\n1 0\n")

    def test_empty_matrix(self):
        assert parse_matrix("sym 0\n") == SymMatrix.empty()
        assert serialize_matrix(SymMatrix.empty()) == "sym 0\n"

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32 - 1))
    def test_round_trip(self, seed):
        rng = random.Random(seed)
        G = random_sym_rational(rng, rng.randint(0, 5), 9, 7)
        assert parse_matrix(serialize_matrix(G)) == G


class TestIntMatrixFormat:
    def test_round_trip(self):
        C = IntMatrix.from_rows([[1, -2, 0], [3, 4, 5]])
        assert parse_int_matrix(serialize_int_matrix(C)) == C

    def test_empty(self):
        C = IntMatrix.from_rows([], cols=0)
        assert parse_int_matrix(serialize_int_matrix(C)) == C

    def test_rejects_fraction(self):
        with pytest.raises(ParseError):
            parse_int_matrix("int 1 1\n1/2\n")


class TestTraceFormat:
    @pytest.mark.parametrize(
        "trace", [five_to_minus_five_trace(), obstructed_matrix_reduction_trace()]
    )
    def test_round_trip(self, trace):
        assert parse_trace(serialize_trace(trace)) == trace

    def test_empty_matrices(self):
        from kinkeq import Kink, Trace, Unkink

        trace = Trace(
            SymMatrix.empty(), (Kink(1), Unkink(1)), SymMatrix.empty()
        )
        text = serialize_trace(trace)
        assert "empty" in text
        assert parse_trace(text) == trace
        assert verify_trace(trace).valid

    def test_rejects_missing_end(self):
        with pytest.raises(ParseError):
            parse_trace("trace\n5\nkink -1\n")

    def test_rejects_bad_move(self):
        with pytest.raises(ParseError) as exc:
            parse_trace("trace\n5\ntwist +1\nend 5\n")
        assert exc.value.line == 3

    def test_rejects_bad_sign(self):
        with pytest.raises(ParseError):
            parse_trace("trace\n5\nkink 2\nend 5\n")


class TestQuadraticForm:
    def test_paper_translation(self):
        G = parse_quadratic_form("5*x1^2 + 6*x1*x2 + 6*x2^2")
        assert G == SymMatrix.from_rows([[5, 3], [3, 6]])

    def test_single_square(self):
        assert parse_quadratic_form("x1^2") == SymMatrix.from_rows([[1]])

    def test_odd_cross_term(self):
        G = parse_quadratic_form("x1*x2")
        assert G == SymMatrix.from_rows(
            [[0, Fraction(1, 2)], [Fraction(1, 2), 0]]
        )

    def test_rational_coefficient_and_gaps(self):
        G = parse_quadratic_form("1/2*x1^2 - x1*x2 + 2*x2^2")
        assert G == SymMatrix.from_rows(
            [[Fraction(1, 2), Fraction(-1, 2)], [Fraction(-1, 2), 2]]
        )

    def test_repeated_variable_product(self):
        assert parse_quadratic_form("x1*x1") == SymMatrix.from_rows([[1]])

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariable):
            parse_quadratic_form("y^2")
        with pytest.raises(UnknownVariable):
            parse_quadratic_form("x0^2")

    def test_degree_error(self):
        with pytest.raises(DegreeError):
            parse_quadratic_form("x1^2*x2")
        with pytest.raises(DegreeError):
            parse_quadratic_form("x1 + x2^2")

    def test_parse_error(self):
        with pytest.raises(ParseError):
            parse_quadratic_form("")
        with pytest.raises(ParseError):
            parse_quadratic_form("x1^2 + +")

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32 - 1))
    def test_round_trip_evaluation(self, seed):
        from kinkeq.exact import evaluate_form

        rng = random.Random(seed)
        n = rng.randint(1, 4)
        coeffs = {}
        terms = []
        for i in range(1, n + 1):
            c = rng.randint(-5, 5)
            coeffs[(i, i)] = c
            terms.append(f"{c}*x{i}^2" if c >= 0 else f"-{-c}*x{i}^2")
            for j in range(i + 1, n + 1):
                c = rng.randint(-5, 5)
                coeffs[(i, j)] = c
                terms.append(f"{c}*x{i}*x{j}" if c >= 0 else f"-{-c}*x{i}*x{j}")
        G = parse_quadratic_form(" + ".join(terms).replace("+ -", "- "))
        for _ in range(5):
            v = [rng.randint(-4, 4) for _ in range(n)]
            direct = sum(
                coeffs[(i, j)] * v[i - 1] * v[j - 1]
                for (i, j) in coeffs
            )
            assert evaluate_form(G, v) == direct


class TestBlowupReport:
    def test_scalar(self):
        report = blowup_report(SymMatrix.from_rows([[1]]))
        assert "inertia (n+, n-, n0) = (1, 0, 0)" in report
        assert "-I_4" in report and "I_0" in report

    def test_indefinite_diag(self):
        report = blowup_report(SymMatrix.diagonal([1, -1]))
        assert "(1, 1, 0)" in report

    def test_hyperbolic(self):
        report = blowup_report(SymMatrix.from_rows([[0, 1], [1, 0]]))
        assert "(1, 1, 0)" in report and "signature = 0" in report

    def test_rejects_non_unimodular(self):
        with pytest.raises(NotUnimodularForm):
            blowup_report(SymMatrix.from_rows([[2]]))
        with pytest.raises(NotUnimodularForm):
            blowup_report(SymMatrix.from_rows([[Fraction(1, 2)]]))

    def test_embedded_traces_verify(self):
        report = blowup_report(SymMatrix.from_rows([[0, 1], [1, 0]]))
        sections = report.split("--- trace (target ")
        assert len(sections) == 3
        for section in sections[1:]:
            _, _, body = section.partition("---\n")
            trace = parse_trace(body)
            assert verify_trace(trace).valid
        neg_trace = parse_trace(sections[1].partition("---\n")[2])
        assert inertia(neg_trace.end).n_plus == 0
