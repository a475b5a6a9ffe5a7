from fractions import Fraction

import hypothesis.strategies as st
import pytest
import sympy as sp
from hypothesis import given

from conftest import rationals
from secsing import exact
from secsing.errors import DomainError
from secsing.exact import EchelonBuilder, ExactMatrix, Subspace


@st.composite
def low_rank_matrices(draw, max_dim=6):
    r = draw(st.integers(0, max_dim))
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    A = [[draw(rationals) for _ in range(r)] for _ in range(m)]
    B = [[draw(rationals) for _ in range(n)] for _ in range(r)]
    rows = [[sum((A[i][t] * B[t][j] for t in range(r)), Fraction(0)) for j in range(n)] for i in range(m)]
    return ExactMatrix.from_rows(rows)


def _sympy(M):
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in r] for r in M.entries])


@given(low_rank_matrices())
def test_rank_matches_sympy_and_mod_p(M):
    r = exact.rank(M)
    assert r == _sympy(M).rank()
    assert exact.rank_mod_p(M, 1_000_003) <= r


@given(low_rank_matrices())
def test_kernel_dimension_and_annihilation(M):
    K = exact.kernel(M)
    assert K.dim == M.ncols - exact.rank(M)
    for v in K.vectors():
        assert all(x == 0 for x in M.apply(v))
    W = exact.left_kernel(M)
    assert W.dim == M.nrows - exact.rank(M)
    for w in W.vectors():
        assert all(x == 0 for x in M.transpose().apply(w))


@given(low_rank_matrices())
def test_annihilator_involution(M):
    S = exact.row_space(M)
    assert exact.annihilator(exact.annihilator(S)) == S
    assert S.dim + exact.annihilator(S).dim == S.ambient_dim


@given(low_rank_matrices(), low_rank_matrices())
def test_sum_and_intersection_dims(M, N):
    if M.ncols != N.ncols:
        return
    A = exact.row_space(M)
    B = exact.row_space(N)
    A = A.relabel(range(A.ambient_dim))
    B = B.relabel(range(B.ambient_dim))
    assert (A + B).dim + A.intersection(B).dim == A.dim + B.dim
    assert (A + B).contains(A) and (A + B).contains(B)
    assert A.contains(A.intersection(B))


@given(low_rank_matrices())
def test_span_is_canonical(M):
    rows = list(M.entries)
    a = Subspace.span(range(M.ncols), rows)
    b = Subspace.span(range(M.ncols), list(reversed(rows)) + [[2 * x for x in r] for r in rows])
    assert a == b and hash(a) == hash(b)


@given(low_rank_matrices())
def test_text_roundtrip(M):
    text = M.to_text()
    first = text.splitlines()[0]
    assert first == f"{M.nrows} {M.ncols}"
    assert ExactMatrix.from_text(text).entries == M.entries


def test_transpose_and_labels():
    M = ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6]], ["a", "b"], ["x", "y", "z"])
    assert M.T.entries == ((1, 4), (2, 5), (3, 6))
    assert M.T.row_labels == ("x", "y", "z")
    assert M.T.T == M
    assert exact.rank(M) == 2


def test_bareiss_small():
    rows, pivots = exact.bareiss_echelon([[2, 4], [1, 2]], 2)
    assert pivots == [0] and rows == [[2, 4]]


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_last_pivot_is_determinant(rows):
    det = sp.Matrix(rows).det()
    ech, pivots = exact.bareiss_echelon(rows, 4)
    if det != 0:
        assert pivots == [0, 1, 2, 3]
        # row swaps flip the sign only
        assert abs(ech[3][3]) == abs(det)
    else:
        assert len(pivots) < 4


def test_echelon_builder_incremental():
    b = EchelonBuilder(3)
    assert b.add({0: 1, 1: 1})
    assert not b.add({0: 2, 1: 2})
    assert b.add([0, 0, 5])
    assert len(b) == 2


def test_contains_errors():
    S = Subspace.span(range(2), [[1, 1]])
    assert S.contains([3, 3]) and not S.contains([1, 0])
    with pytest.raises(DomainError):
        S.contains([1, 1, 1])
    with pytest.raises(DomainError):
        S + Subspace.zero(range(3))
