import itertools

import numpy as np
import pytest

from liftmrd import linalg
from liftmrd.bounds import johnson_bound
from liftmrd.errors import ParameterError
from liftmrd.fields import field
from liftmrd.grassmann import (PointIndex, Subspace, enumerate_grassmannian, enumerate_points,
                               gaussian, grassmannian_array, identifying_vectors,
                               subspace_from_rows, subspace_from_text)


@pytest.mark.parametrize("n,k,q,val", [(4, 2, 2, 35), (6, 2, 2, 651), (13, 2, 2, 11180715),
                                       (4, 2, 3, 130), (5, 0, 2, 1), (3, 4, 2, 0)])
def test_gaussian(n, k, q, val):
    assert gaussian(n, k, q) == val


@pytest.mark.parametrize("q,n,k", [(2, 4, 2), (2, 5, 2), (3, 4, 2), (2, 6, 3), (4, 4, 1)])
def test_enumeration_count_and_distinct(q, n, k):
    G = grassmannian_array(q, n, k)
    assert len(G) == gaussian(n, k, q)
    assert len(np.unique(linalg.row_keys(G, q), axis=0)) == len(G)
    R, ranks = linalg.rref_batch(G, field(q))
    assert (ranks == k).all() and np.array_equal(R, G)


def test_identifying_vectors():
    ivs = list(identifying_vectors(5, 2))
    assert len(ivs) == 10 and all(sum(v) == 2 for v in ivs)


def test_text_roundtrip():
    for q in (2, 3, 11):
        for S in itertools.islice(enumerate_grassmannian(q, 5, 2), 40):
            assert subspace_from_text(q, S.to_text()) == S


def test_canonical_equality():
    a = subspace_from_rows(2, 4, [[1, 1, 0, 0], [0, 1, 1, 0]])
    b = subspace_from_rows(2, 4, [[1, 0, 1, 0], [1, 1, 0, 0]])
    assert a == b and hash(a) == hash(b)
    with pytest.raises(ParameterError):
        subspace_from_rows(2, 3, [[0, 0, 0]])


def test_tableaux_example():
    S = subspace_from_rows(2, 7, [[1, 0, 0, 0, 1, 1, 0], [0, 0, 1, 0, 1, 0, 1],
                                  [0, 0, 0, 1, 0, 1, 1]])
    assert S.identifying_vector() == (1, 0, 1, 1, 0, 0, 0)
    assert S.ferrers_tableaux() == ((0, 1, 1, 0), (1, 0, 1), (0, 1, 1))


def _distance_matrix(q, n, k):
    G = grassmannian_array(q, n, k)
    i, j = np.triu_indices(len(G), 1)
    ranks = linalg.rank_batch(np.concatenate([G[i], G[j]], axis=1), field(q))
    D = np.zeros((len(G), len(G)), dtype=np.int64)
    D[i, j] = D[j, i] = 2 * ranks - 2 * k
    return G, D


def test_triangle_inequality_g2_5_2():
    _, D = _distance_matrix(2, 5, 2)
    assert (D[:, None, :] <= D[:, :, None] + D[None, :, :]).all()


def test_distance_symmetric_and_matches_object():
    G, D = _distance_matrix(3, 4, 2)
    S = [Subspace(3, g, canonical=True) for g in G]
    for a, b in itertools.combinations(range(len(S)), 2):
        if (a * 31 + b) % 17 == 0:
            assert S[a].distance(S[b]) == S[b].distance(S[a]) == D[a, b]
            assert S[a].intersection_dim(S[b]) == 2 - D[a, b] // 2


def _max_clique(adj):
    best = []

    def grow(clique, cand):
        nonlocal best
        if len(clique) > len(best):
            best = clique
        for idx, v in enumerate(cand):
            if len(clique) + len(cand) - idx <= len(best):
                return
            grow(clique + [v], [w for w in cand[idx + 1:] if adj[v, w]])

    grow([], list(range(len(adj))))
    return best


def test_johnson_matches_max_clique_delta_equals_k():
    _, D = _distance_matrix(2, 4, 2)
    clique = _max_clique(D == 4)
    assert len(clique) == int(johnson_bound(2, 4, 2, 2)) == 5


def test_point_index():
    idx = PointIndex(2, 4, 2)
    assert (idx.num_groups, idx.group_size, idx.num_points) == (3, 4, 12)
    assert idx.classify([0, 0, 1, 1]) == "V0"
    for i in range(idx.num_points):
        assert idx.index_of(np.array(idx.point(i))) == i
    pts = enumerate_points(2, 4, 2)
    assert len(pts["V0"]) == 3
    assert sum(len(v) for v in pts.values()) == 15
    idx3 = PointIndex(3, 4, 2)
    assert idx3.classify([2, 1, 0, 0]) == (1, 2)
