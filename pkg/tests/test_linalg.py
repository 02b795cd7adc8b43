import pytest
from hypothesis import given, settings, strategies as st

from toruscomp.errors import NonInvertible
from toruscomp.ffield import FieldCtx
from toruscomp.linalg import Matrix, inverse, kernel_basis, rank, rref, solve

from oracles import brute_nullspace

F7, F3, F2 = FieldCtx(7), FieldCtx(3), FieldCtx(2)


def test_rref_examples():
    m, piv, r = rref(Matrix.identity(F7, 2))
    assert m.tolist() == [[1, 0], [0, 1]] and piv == [0, 1] and r == 2
    m, piv, r = rref(Matrix.from_rows(F7, [[1, 2], [2, 4]]))
    assert m.tolist() == [[1, 2], [0, 0]] and r == 1
    m, piv, r = rref(Matrix.from_rows(F3, [[1, 2], [2, 1]]))
    assert m.tolist() == [[1, 2], [0, 0]] and r == 1


def test_kernel_examples():
    assert kernel_basis(Matrix.from_rows(F3, [[1, 2], [2, 1]])) == [(1, 1)]
    assert kernel_basis(Matrix.identity(F7, 4)) == []
    assert kernel_basis(Matrix.from_rows(F2, [[1, 1, 1]])) == [(1, 1, 0), (1, 0, 1)]


def test_empty_matrix():
    m = Matrix.from_rows(F7, [], cols=3)
    assert rank(m) == 0
    assert len(kernel_basis(m)) == 3


matrices = st.sampled_from([2, 3, 5, 7]).flatmap(
    lambda q: st.tuples(
        st.just(q),
        st.integers(1, 4).flatmap(
            lambda nr: st.integers(1, 5).flatmap(
                lambda nc: st.lists(
                    st.lists(st.integers(0, q - 1), min_size=nc, max_size=nc),
                    min_size=nr,
                    max_size=nr,
                )
            )
        ),
    )
).filter(lambda t: t[0] ** len(t[1][0]) <= 1 << 16)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_kernel_against_enumeration(qm):
    q, rows = qm
    ctx = FieldCtx(q)
    m = Matrix.from_rows(ctx, rows)
    basis = kernel_basis(m)
    red, piv, r = rref(m)
    ncols = len(rows[0])
    assert r + len(basis) == ncols
    assert len(brute_nullspace(rows, q, ncols)) == q ** len(basis)
    for w in basis:
        assert all(v == 0 for v in m @ w)
    if basis:
        assert rank(Matrix.from_rows(ctx, basis)) == len(basis)
    assert rref(red)[0] == red


def test_inverse_and_solve():
    m = Matrix.from_rows(F7, [[1, 2, 0], [3, 1, 4], [0, 5, 6]])
    inv = inverse(m)
    assert (m @ inv) == Matrix.identity(F7, 3)
    w = solve(m, [1, 2, 3])
    assert m @ w == (1, 2, 3)
    with pytest.raises(NonInvertible):
        inverse(Matrix.from_rows(F7, [[1, 2], [2, 4]]))
    with pytest.raises(NonInvertible):
        solve(Matrix.from_rows(F7, [[1, 2], [2, 4]]), [1, 1])


def test_big_prime_object_path():
    q = (1 << 127) - 1
    ctx = FieldCtx(q)
    m = Matrix.from_rows(ctx, [[q - 1, 2, 3], [5, q - 7, 11], [13, 17, q - 19]])
    assert m.entries.dtype == object
    assert m @ inverse(m) == Matrix.identity(ctx, 3)
    k = kernel_basis(Matrix.from_rows(ctx, [[1, q - 1, 0], [0, 1, q - 1]]))
    assert k == [(1, 1, 1)]
