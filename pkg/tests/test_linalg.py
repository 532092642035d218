from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cotangent.linalg import RationalMatrix, apply_columns, nullspace, rank, transpose

small = st.integers(-3, 3)
matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
)


def dense_rank(rows):
    # independent: fraction Gaussian elimination on a dense copy
    M = [[Fraction(x) for x in row] for row in rows]
    r = 0
    for c in range(len(M[0])):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
    return r


def test_small_examples():
    assert rank(RationalMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3
    assert rank(RationalMatrix.from_dense([[0, 0], [0, 0]])) == 0
    assert rank(RationalMatrix.from_dense([[1, 2], [2, 4]])) == 1


@given(matrices)
def test_rank_matches_dense_elimination(rows):
    M = RationalMatrix.from_dense(rows)
    assert rank(M) == dense_rank(rows)


@given(matrices)
def test_rank_nullity(rows):
    M = RationalMatrix.from_dense(rows)
    basis = nullspace(M.row_dicts(), range(M.cols))
    assert len(basis) + rank(M) == M.cols
    for vec in basis:
        for row in M.row_dicts():
            assert sum(v * vec.get(c, 0) for c, v in row.items()) == 0


@given(matrices)
def test_transpose_rank_and_product(rows):
    M = RationalMatrix.from_dense(rows)
    T = RationalMatrix.from_columns(M.row_dicts(), M.cols)
    assert rank(T) == rank(M)
    assert (M @ RationalMatrix.from_dense([[1]] * M.cols)).to_dense() == [[sum(r)] for r in rows]


def test_nullspace_with_tuple_keys():
    rows = [{("a",): 1, ("b",): -1}]
    (vec,) = nullspace(rows, [("a",), ("b",)])
    assert vec == {("b",): 1, ("a",): 1}


def test_operator_helpers():
    cols = transpose({"y": {"x": 2}, "z": {"x": 1}})
    assert cols == {"x": {"y": 2, "z": 1}}
    assert apply_columns(cols, {"x": 3}) == {"y": 6, "z": 3}


def test_json_and_validation():
    M = RationalMatrix(2, 2, {(0, 1): Fraction(1, 2), (1, 1): 0})
    assert M.dumps() == '{"cols":2,"entries":[[0,1,"1/2"]],"rows":2}'
    with pytest.raises(IndexError):
        RationalMatrix(1, 1, {(1, 0): 1})
    with pytest.raises(ValueError):
        M @ RationalMatrix(3, 1)
