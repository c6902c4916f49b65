from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamred.linalg import (
    SpanSolver,
    complement_reps,
    contains,
    coordinates,
    intersect,
    kernel,
    rref_span,
    span_sum,
)

from oracles import dense_rank

F = Fraction


def test_rref_examples():
    S = rref_span([(1, 0), (1, 1)])
    assert S.dim == 2 and S.basis == ((1, 0), (0, 1))
    assert rref_span([], 3).dim == 0
    T = rref_span([(2, 4), (1, 2)])
    assert T.dim == 1 and T.basis == ((1, 2),)


def test_rref_errors():
    with pytest.raises(ValueError):
        rref_span([(1, 0), (1, 0, 0)])
    with pytest.raises(ValueError):
        rref_span([])
    with pytest.raises(ValueError):
        rref_span([{5: 1}], 3)


def test_sparse_and_dense_agree():
    dense = [(0, 1, 0, 2), (1, 0, 0, 0)]
    sparse = [{1: 1, 3: 2}, {0: 1}]
    assert rref_span(dense) == rref_span(sparse, 4)


def test_contains():
    S = rref_span([(1, 0)])
    assert contains(S, (3, 0))
    assert not contains(S, (0, 1))
    with pytest.raises(ValueError):
        contains(S, (1, 0, 0))


def test_kernel_examples():
    assert kernel([[0, 0], [0, 0]]).dim == 2
    assert kernel([[1, 0], [0, 1]]).dim == 0
    K = kernel([[1, 1]])
    assert K.dim == 1
    v = K.basis[0]
    assert v[0] == -v[1] != 0
    assert kernel([], 3).dim == 3
    with pytest.raises(ValueError):
        kernel([[1, 2], [1]])


def test_intersect_examples():
    e = lambda i: tuple(F(int(j == i)) for j in range(3))  # noqa: E731
    S = rref_span([e(0), e(1)])
    T = rref_span([e(1), e(2)])
    assert intersect(S, T) == rref_span([e(1)])
    assert intersect(S, S) == S
    with pytest.raises(ValueError):
        intersect(S, rref_span([(1, 0)]))


def test_complement_reps_examples():
    R2 = rref_span([(1, 0), (0, 1)])
    reps = complement_reps(R2, rref_span([(1, 0)]))
    assert len(reps) == 1 and reps[0][1] != 0
    assert complement_reps(R2, R2) == []
    with pytest.raises(ValueError):
        complement_reps(rref_span([(1, 0)]), R2)


def test_span_solver():
    basis = [(1, 1, 0), (0, 2, 1)]
    solver = SpanSolver(basis, 3)
    assert solver.solve((3, 7, 2)) == [3, 2]
    with pytest.raises(ValueError):
        solver.solve((1, 0, 0))
    with pytest.raises(ValueError):
        SpanSolver([(1, 0), (2, 0)], 2)
    assert coordinates(basis, (F(1, 2), F(1, 2), 0)) == [F(1, 2), 0]


# properties against plain Gaussian elimination

small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(small) for _ in range(c)] for _ in range(r)]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_and_kernel(M):
    S = rref_span(M)
    assert S.dim == dense_rank(M)
    K = kernel(M)
    assert K.dim + S.dim == len(M[0])
    for v in K.basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)
    for row in M:
        assert S.contains(row)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 6), st.data())
def test_intersection_dimension_formula(n, data):
    vecs = st.lists(st.lists(small, min_size=n, max_size=n), min_size=0, max_size=4)
    S = rref_span(data.draw(vecs), n)
    T = rref_span(data.draw(vecs), n)
    I = intersect(S, T)
    assert I.dim == S.dim + T.dim - span_sum(S, T).dim
    assert I <= S and I <= T
    reps = complement_reps(S, I)
    assert len(reps) == S.dim - I.dim
    assert rref_span(list(I.basis) + list(reps), n) == S


@settings(max_examples=100, deadline=None)
@given(matrices(4, 5), st.data())
def test_solver_recovers_coefficients(M, data):
    basis = list(rref_span(M).basis)
    if not basis:
        return
    coeffs = [data.draw(small) for _ in basis]
    v = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(len(basis[0]))]
    assert SpanSolver(basis, len(v)).solve(v) == coeffs
