import itertools

import numpy as np
import pytest

from liftmrd.codes import verify_min_subspace_distance
from liftmrd.errors import ParameterError
from liftmrd.grassmann import Subspace
from liftmrd.rankmetric import (gabidulin, lift, lift_code, lifted_mrd, lifted_mrd_size,
                                min_rank_distance, rank_distance)

A = np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]], dtype=np.uint8)


def test_rank_distance_basic():
    assert rank_distance(A, A, 2) == 0
    assert rank_distance(A, np.zeros_like(A), 2) == 3


def test_rank_distance_symmetric():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        q = int(rng.choice([2, 3, 4]))
        X, Y = (rng.integers(0, q, (3, 4)).astype(np.uint8) for _ in range(2))
        assert rank_distance(X, Y, q) == rank_distance(Y, X, q)


def test_lift_example():
    S = Subspace(2, lift(A[None])[0], canonical=True)
    want = {"100110", "010011", "001001", "110101", "101111", "011010", "111100", "000000"}
    assert {"".join(map(str, v)) for v in S.vectors().tolist()} == want


def test_lift_zero():
    S = lift(np.zeros((1, 2, 3), np.uint8))[0]
    assert np.array_equal(S, np.eye(2, 5, dtype=np.uint8))


@pytest.mark.parametrize("q,k,ell,delta", [(2, 2, 2, 2), (2, 2, 2, 1), (2, 3, 3, 2), (2, 2, 3, 2),
                                           (3, 2, 2, 2), (2, 3, 4, 3), (4, 2, 2, 2)])
def test_gabidulin_is_mrd(q, k, ell, delta):
    R = gabidulin(q, k, ell, delta)
    assert len(R) == q ** (ell * (k - delta + 1))
    d, _ = min_rank_distance(R)
    assert d == delta


def test_gabidulin_small_exhaustive_pairs():
    R = gabidulin(2, 2, 2, 2)
    Ms = R.matrices()
    assert len(Ms) == 4
    assert all(rank_distance(a, b, 2) == 2 for a, b in itertools.combinations(Ms, 2))


def test_delta_equals_k_pairwise_full_rank():
    R = gabidulin(2, 2, 3, 2)
    Ms = R.matrices()
    assert len(Ms) == 8
    assert all(rank_distance(a, b, 2) == 2 for a, b in itertools.combinations(Ms, 2))


@pytest.mark.parametrize("args", [(2, 3, 3, 4), (2, 4, 3, 2), (2, 2, 2, 0)])
def test_gabidulin_errors(args):
    with pytest.raises(ParameterError):
        gabidulin(*args)


def test_message_order_stable():
    R = gabidulin(3, 2, 3, 1)
    Ms = R.matrices()
    for i in (0, 1, 5, 100, len(Ms) - 1):
        assert np.array_equal(R.matrix(i), Ms[i])
    assert R.parallel_class(R.q**R.ell + 3) == (1, 3)


def test_lifted_sizes():
    C = lifted_mrd(2, 8, 4, 2)
    assert len(C) == lifted_mrd_size(2, 8, 4, 2) == 4096
    assert C.delta == 2 and C.claimed_distance == 4
    assert len(lift_code(gabidulin(2, 2, 2, 1))) == 16


def test_lifted_distance_examples():
    assert verify_min_subspace_distance(lifted_mrd(2, 6, 2, 1)).min_distance == 2
    single = lifted_mrd(2, 4, 2, 2).subcode([0])
    rep = verify_min_subspace_distance(single)
    assert rep.min_distance is None and rep.pairs == 0


@pytest.mark.parametrize("params", [(2, 6, 3, 2), (2, 8, 4, 2)])
def test_nonzero_prefix(params):
    C = lifted_mrd(*params)
    k = params[2]
    coeffs = np.array(list(itertools.product(range(2), repeat=k))[1:], np.uint8)
    V = (coeffs[None].astype(int) @ C.gens.astype(int)) % 2
    assert V[..., :k].any(-1).all()
