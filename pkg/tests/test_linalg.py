import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qmatroids.gf import field
from qmatroids.linalg import (
    MatGF, _rref_generic, in_rowspace, is_invertible, kernel, pack, rank, rref, rref_bits, unpack,
)
from conftest import span_set

GF2 = field(2)


def matrices(q, max_rows=5, max_cols=6):
    F = field(q)
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, q - 1), min_size=c, max_size=c),
                           min_size=r, max_size=r).map(lambda rows: MatGF.from_rows(F, rows, c))))


def test_identity_is_reduced():
    I = MatGF.identity(GF2, 3)
    R, piv, r = rref(I)
    assert R == I and piv == (0, 1, 2) and r == 3


def test_equal_rows_cancel():
    R, piv, r = rref(MatGF.from_rows(GF2, [[1, 1], [1, 1]]))
    assert R.entries == ((1, 1), (0, 0)) and r == 1 and piv == (0,)


def test_rank_matches_row_space_size(rng):
    for _ in range(50):
        rows = rng.integers(0, 2, size=(3, 5)).tolist()
        M = MatGF.from_rows(GF2, rows)
        assert len(span_set(rows)) == 2 ** rank(M)


def test_kernel_examples():
    assert kernel(MatGF.identity(GF2, 4)).rows == 0
    K = kernel(MatGF.zeros(GF2, 2, 3))
    assert K == MatGF.identity(GF2, 3)
    M = MatGF.from_rows(GF2, [[1, 1, 0, 0]])
    K = kernel(M)
    assert K.rows == 3
    for x in span_set(K.entries):
        assert (x[0] + x[1]) % 2 == 0


def test_bit_packing_round_trip():
    for row in itertools.product(range(2), repeat=5):
        assert unpack(pack(row), 5) == row
    assert pack((1, 0, 0)) == 0b100


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_rref_invariants(q, data):
    M = data.draw(matrices(q))
    F = M.field
    R, piv, r = rref(M)
    assert list(piv) == sorted(set(piv)) and r == len(piv)
    assert rref(R)[0] == R
    for i, c in enumerate(piv):
        assert R.entries[i][c] == 1
        assert all(R.entries[j][c] == 0 for j in range(M.rows) if j != i)
    # same row space: each side's rows lie in the other's span
    for row in M.entries:
        assert in_rowspace(R, row)
    for row in R.entries[:r]:
        assert in_rowspace(M, row)
    K = kernel(M)
    assert r + K.rows == M.cols
    if K.rows:
        prod = M @ K.transpose()
        assert all(x == 0 for row in prod.entries for x in row)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(0, 1), min_size=6, max_size=6), min_size=1, max_size=6))
def test_bit_path_agrees_with_generic_path(rows):
    bits, piv_b = rref_bits([pack(r) for r in rows], 6)
    gen, piv_g = _rref_generic(GF2, rows, 6)
    assert piv_b == piv_g
    assert [unpack(b, 6) for b in bits] == [tuple(r) for r in gen]


def test_matmul_against_numpy():
    A = np.array([[1, 2, 0], [3, 4, 1]])
    B = np.array([[1, 0], [2, 1], [4, 3]])
    F = field(5)
    got = MatGF.from_rows(F, A.tolist()) @ MatGF.from_rows(F, B.tolist())
    assert np.array_equal(np.array(got.entries), (A @ B) % 5)


def test_invertibility():
    assert is_invertible(MatGF.identity(field(3), 3))
    assert not is_invertible(MatGF.from_rows(GF2, [[1, 1], [1, 1]]))
    assert not is_invertible(MatGF.from_rows(GF2, [[1, 0, 0], [0, 1, 0]]))
