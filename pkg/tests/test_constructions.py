import itertools

import pytest

from liftmrd.constructions import (PATTERNS_Q2, WeightTwoPartition, construction_I,
                                   construction_I_plan, construction_I_size, construction_II,
                                   construction_II_plan, construction_II_size, construction_III,
                                   construction_III_size, cross_point_sets, one_factorization,
                                   plan_size)
from liftmrd.errors import CapExceeded, ParameterError
from liftmrd.grassmann import gaussian, subspace_from_rows
from liftmrd.parallelism import parallelism_g2_4_2


@pytest.mark.parametrize("m", range(2, 14))
def test_one_factorization(m):
    P = one_factorization(m)
    assert P.check()
    assert len(P.classes) == (m - 1 if m % 2 == 0 else m)


@pytest.mark.parametrize("q,n", [(2, 8), (2, 9), (2, 10), (3, 8), (3, 12), (5, 9)])
def test_construction_I_size_formula(q, n):
    assert plan_size(q, construction_I_plan(q, n)) == construction_I_size(q, n) \
        == q ** (2 * (n - 3)) + gaussian(n - 3, 2, q)


@pytest.mark.parametrize("q,n", [(2, 11), (2, 13), (2, 14), (2, 20), (3, 17)])
def test_construction_II_size_formula(q, n):
    assert plan_size(q, construction_II_plan(q, n)) == construction_II_size(q, n)


def test_construction_preconditions():
    with pytest.raises(ParameterError):
        construction_I_plan(2, 7)
    with pytest.raises(ParameterError, match="construction_II"):
        construction_I_plan(2, 12)
    with pytest.raises(ParameterError, match="construction_I"):
        construction_II_plan(2, 9)
    with pytest.raises(ParameterError):
        construction_I_plan(2, 8, WeightTwoPartition(5, (((0, 1),),)))
    with pytest.raises(CapExceeded):
        construction_II(2, 13, cap=1000)
    with pytest.raises(ParameterError):
        construction_III(3)


def test_construction_II_labels_and_order():
    C = construction_II(2, 11)
    assert len(C) == construction_II_size(2, 11) == 76331
    assert C.labels is not None and len(C.components) == C.labels.max() + 1
    assert (C.labels[: 2**16] == 0).all()


def test_cross_codewords_q2():
    P = parallelism_g2_4_2().subspaces()
    Z, Zp = P[0][0], P[0][1]  # <1000,0100> and <1010,0101>
    assert Z.to_text() == "1100:00;00"
    sets = cross_point_sets(2, Z, Zp)
    assert len(sets) == 4
    for pts in sets:
        S = subspace_from_rows(2, 8, pts)
        assert S.k == 4 and len(pts) == 15
        assert {tuple(v) for v in S.vectors()[1:].tolist()} == {tuple(v) for v in pts.tolist()}
    # family 0 keeps every tail inside Z itself
    assert all(not r[6:].any() for r in sets[0])
    assert PATTERNS_Q2[0] == (0, 0, 0)


def test_cross_codeword_counts():
    C = construction_III(2)
    cross = C.gens[C.labels == 1]
    assert len(cross) == 35 * 5 * 4 == 700
    assert construction_III_size(2) == 4797
    assert construction_III_size(4) == 4**12 + 97105


@pytest.mark.parametrize("n", [8, 10])
def test_construction_I_contains_mrd_and_extra_ivs(n):
    C = construction_I(2, n)
    piv = (C.gens != 0).argmax(axis=2)
    first = piv[:, 0]
    assert ((first == 0) & (piv[:, 1] == 1) & (piv[:, 2] == 2)).sum() == 2 ** (2 * (n - 3))
    extra = ~((piv[:, 0] == 0) & (piv[:, 1] == 1) & (piv[:, 2] == 2))
    assert extra.sum() == gaussian(n - 3, 2, 2)
    ivs = {tuple(p) for p in piv[extra].tolist()}
    assert all(sum(1 for x in p if x < 3) == 1 for p in ivs)


def test_weight_two_partition_rejects_overlap():
    assert not WeightTwoPartition(4, (((0, 1), (1, 2)), ((0, 2),), ((0, 3),), ((1, 3),),
                                      ((2, 3),))).check()
    assert all(len(set(itertools.chain(*c))) == 2 * len(c) for c in one_factorization(9).classes)
