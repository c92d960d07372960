"""Exact linear algebra: inertia, determinant, congruence, primitivity."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kinkeq import (
    IntMatrix,
    SymMatrix,
    congruence,
    determinant,
    extend_primitive,
    inertia,
    is_unimodular,
    primitive_scale,
)
from kinkeq.errors import NotPrimitive, NotUnimodular, SizeMismatch, ZeroVector
from kinkeq.exact import diagonalizing_congruence, evaluate_form
from kinkeq.worked_examples import OBSTRUCTED_GRAM_MATRIX

from oracles import cofactor_det, inertia_oracle, random_sym, random_unimodular

sym_entries = st.integers(min_value=-9, max_value=9)


@st.composite
def sym_matrices(draw, max_n=5):
    n = draw(st.integers(min_value=0, max_value=max_n))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = draw(sym_entries)
    return SymMatrix.from_rows(rows)


class TestInertia:
    def test_diagonal(self):
        assert inertia(SymMatrix.diagonal([1, -1])) == inertia(SymMatrix.diagonal([7, -3]))
        sig = inertia(SymMatrix.diagonal([1, -1]))
        assert (sig.n_plus, sig.n_minus, sig.n_zero) == (1, 1, 0)

    def test_obstructed_matrix_is_positive_definite(self):
        sig = inertia(OBSTRUCTED_GRAM_MATRIX)
        assert (sig.n_plus, sig.n_minus, sig.n_zero) == (6, 0, 0)

    def test_leading_minor_example(self):
        sig = inertia(SymMatrix.from_rows([[5, 3], [3, 6]]))
        assert (sig.n_plus, sig.n_minus, sig.n_zero) == (2, 0, 0)

    def test_empty(self):
        sig = inertia(SymMatrix.empty())
        assert (sig.n_plus, sig.n_minus, sig.n_zero) == (0, 0, 0)

    def test_zero_diagonal_hyperbolic(self):
        sig = inertia(SymMatrix.from_rows([[0, 1], [1, 0]]))
        assert (sig.n_plus, sig.n_minus, sig.n_zero) == (1, 1, 0)

    def test_zero_matrix(self):
        sig = inertia(SymMatrix.from_rows([[0, 0], [0, 0]]))
        assert (sig.n_plus, sig.n_minus, sig.n_zero) == (0, 0, 2)

    def test_signature(self):
        assert inertia(SymMatrix.diagonal([2, 3, -1])).signature == 1

    @settings(max_examples=60, deadline=None)
    @given(sym_matrices())
    def test_agrees_with_charpoly_oracle(self, G):
        sig = inertia(G)
        assert (sig.n_plus, sig.n_minus, sig.n_zero) == inertia_oracle(G)


class TestDeterminant:
    def test_diagonal(self):
        assert determinant(SymMatrix.diagonal([5, -1])) == -5

    def test_2x2(self):
        assert determinant(SymMatrix.from_rows([[5, 3], [3, 6]])) == 21

    def test_3x3(self):
        G = SymMatrix.from_rows([[2, -1, 0], [-1, 4, -1], [0, -1, 3]])
        assert determinant(G) == 19

    def test_empty_is_one(self):
        assert determinant(SymMatrix.empty()) == 1

    def test_rational(self):
        G = SymMatrix.from_rows([[Fraction(1, 2), 1], [1, Fraction(2, 3)]])
        assert determinant(G) == Fraction(1, 3) - 1

    @settings(max_examples=60, deadline=None)
    @given(sym_matrices())
    def test_agrees_with_cofactor_oracle(self, G):
        assert determinant(G) == cofactor_det([list(r) for r in G.entries])


class TestCongruence:
    def test_shear_example(self):
        G = SymMatrix.diagonal([5, -1])
        P = IntMatrix.from_rows([[1, 2], [0, 1]])
        assert congruence(G, P) == SymMatrix.from_rows([[1, -2], [-2, -1]])

    def test_identity(self):
        G = SymMatrix.from_rows([[5, 3], [3, 6]])
        assert congruence(G, IntMatrix.identity(2)) == G

    def test_swap(self):
        P = IntMatrix.from_rows([[0, 1], [1, 0]])
        assert congruence(SymMatrix.diagonal([1, -1]), P) == SymMatrix.diagonal([-1, 1])

    def test_rejects_non_unimodular(self):
        with pytest.raises(NotUnimodular):
            congruence(SymMatrix.diagonal([1, 1]), IntMatrix.from_rows([[2, 0], [0, 1]]))

    def test_rejects_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            congruence(SymMatrix.diagonal([1, 1]), IntMatrix.identity(3))

    @settings(max_examples=60, deadline=None)
    @given(sym_matrices(), st.integers(min_value=0, max_value=2**32 - 1))
    def test_sylvester_and_det_invariance(self, G, seed):
        if G.n == 0:
            return
        P = random_unimodular(random.Random(seed), G.n)
        H = congruence(G, P)
        assert inertia(H) == inertia(G)
        assert abs(determinant(H)) == abs(determinant(G))


class TestUnimodularity:
    def test_examples(self):
        assert is_unimodular(IntMatrix.from_rows([[2, 1], [3, 2]]))
        assert not is_unimodular(IntMatrix.from_rows([[2, 0], [0, 1]]))
        assert is_unimodular(IntMatrix.from_rows([], cols=0))
        assert not is_unimodular(IntMatrix.from_rows([[1, 0]], cols=2))


class TestExtendPrimitive:
    def test_standard_basis_vector(self):
        assert extend_primitive((1, 0, 0)) == IntMatrix.identity(3)

    @pytest.mark.parametrize("b", [(2, 3), (6, 10, 15), (-3, 5), (0, 0, 1), (1,)])
    def test_postconditions(self, b):
        P = extend_primitive(b)
        assert is_unimodular(P)
        assert P.column(0) == tuple(b)

    def test_rejects_imprimitive(self):
        with pytest.raises(NotPrimitive):
            extend_primitive((2, 4))

    def test_rejects_zero(self):
        with pytest.raises(ZeroVector):
            extend_primitive((0, 0))

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.integers(min_value=-20, max_value=20), min_size=1, max_size=6))
    def test_random_primitive_vectors(self, b):
        from math import gcd

        g = 0
        for x in b:
            g = gcd(g, x)
        if g != 1:
            return
        P = extend_primitive(b)
        assert is_unimodular(P)
        assert P.column(0) == tuple(b)


class TestPrimitiveScale:
    def test_examples(self):
        assert primitive_scale((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
        assert primitive_scale((2, 4)) == (1, 2)
        assert primitive_scale((0, Fraction(-5, 3))) == (0, -1)

    def test_rejects_zero(self):
        with pytest.raises(ZeroVector):
            primitive_scale((0, 0))

    @settings(max_examples=80, deadline=None)
    @given(
        st.lists(
            st.fractions(min_value=-9, max_value=9, max_denominator=12),
            min_size=1,
            max_size=6,
        )
    )
    def test_primitive_positive_multiple(self, u):
        from math import gcd

        if all(x == 0 for x in u):
            return
        b = primitive_scale(u)
        g = 0
        for x in b:
            g = gcd(g, x)
        assert g == 1
        # b is a positive multiple of u: cross-ratios agree with matching signs
        nonzero = next(i for i, x in enumerate(u) if x != 0)
        scale = Fraction(b[nonzero]) / u[nonzero]
        assert scale > 0
        assert all(Fraction(x) * scale == y for x, y in zip(u, b))


class TestDiagonalization:
    @settings(max_examples=60, deadline=None)
    @given(sym_matrices())
    def test_rows_are_sign_witnesses(self, G):
        diag, L = diagonalizing_congruence(G)
        for i, d in enumerate(diag):
            assert evaluate_form(G, L[i]) == d
        sig = inertia(G)
        assert sum(1 for d in diag if d > 0) == sig.n_plus
        assert sum(1 for d in diag if d < 0) == sig.n_minus
