import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from liftmrd import linalg
from liftmrd.fields import field


def rand_mat(rng, q, r, c):
    return rng.integers(0, q, (r, c)).astype(np.uint8)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_rank_transpose(q):
    rng = np.random.default_rng(q)
    F = field(q)
    for _ in range(200):
        M = rand_mat(rng, q, int(rng.integers(1, 7)), int(rng.integers(1, 7)))
        assert linalg.rank(M, F) == linalg.rank(M.T, F)


@pytest.mark.parametrize("q", [2, 3, 4, 7])
def test_rref_shape(q):
    rng = np.random.default_rng(100 + q)
    F = field(q)
    for _ in range(100):
        M = rand_mat(rng, q, 5, 8)
        R = linalg.rref(M, F)
        for i, p in enumerate(R.pivots):
            assert R.matrix[i, p] == 1
            assert (R.matrix[:, p] != 0).sum() == 1
            assert not R.matrix[i, :p].any()
        assert not R.matrix[R.rank:].any()
        assert list(R.pivots) == sorted(R.pivots)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_batch_matches_single(q):
    rng = np.random.default_rng(7 * q)
    F = field(q)
    Ms = rng.integers(0, q, (300, 4, 9)).astype(np.uint8)
    R, ranks = linalg.rref_batch(Ms, F)
    for M, r, rk in zip(Ms, R, ranks):
        single = linalg.rref(M, F)
        assert rk == single.rank
        assert np.array_equal(r, single.matrix)
    assert np.array_equal(linalg.rank_batch(Ms, F), ranks)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_inverse_and_kernel(q):
    rng = np.random.default_rng(q)
    F = field(q)
    done = 0
    while done < 30:
        M = rand_mat(rng, q, 4, 4)
        if linalg.rank(M, F) < 4:
            continue
        inv = linalg.inverse(M, F)
        assert np.array_equal(linalg.matmul(M, inv, F), np.eye(4, dtype=np.uint8))
        done += 1
    A = rand_mat(rng, q, 3, 7)
    K = linalg.kernel(A, F)
    assert not linalg.matmul(A, K.T, F).any()
    assert len(K) == 7 - linalg.rank(A, F)


def test_gf2_packed_agrees():
    rng = np.random.default_rng(5)
    for _ in range(50):
        M = rand_mat(rng, 2, 20, 90)
        assert linalg.gf2_rank(M) == linalg.rank(M, 2)
        assert np.array_equal(linalg.gf2_unpack(linalg.gf2_pack(M), 90), M)
        K = linalg.gf2_kernel(M)
        assert not (M.astype(int) @ K.T.astype(int) % 2).any()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(1, 4), st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_row_keys_roundtrip(q, r, c, seed):
    M = np.random.default_rng(seed).integers(0, q, (r, c)).astype(np.uint8)
    keys = linalg.row_keys(M, q)
    assert np.array_equal(linalg.keys_to_rows(keys, q, c), M)


def test_matrix_text_roundtrip():
    M = np.array([[1, 0, 2], [0, 1, 1]], dtype=np.uint8)
    assert np.array_equal(linalg.matrix_from_text(linalg.matrix_to_text(M, 3), 3), M)


def test_reduced_echelon_example():
    # a 3 x 7 binary subspace, scrambled by invertible row operations
    X = np.array([[1, 0, 0, 0, 1, 1, 0], [0, 0, 1, 0, 1, 0, 1], [0, 0, 0, 1, 0, 1, 1]], np.uint8)
    P = np.array([[1, 1, 0], [0, 1, 1], [1, 1, 1]], np.uint8)
    R = linalg.rref(linalg.matmul(P, X, 2), 2)
    assert R.pivots == (0, 2, 3)
    assert np.array_equal(R.matrix, X)
