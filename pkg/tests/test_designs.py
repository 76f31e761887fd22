import numpy as np
import pytest

from liftmrd.designs import (TransversalDesign, mrd_to_oa, parallel_classes, td_from_code,
                             td_to_oa, verify_oa, verify_resolvable, verify_std,
                             verify_subspace_counts, verify_td)
from liftmrd.errors import ParameterError
from liftmrd.lincode import incidence_matrix
from liftmrd.rankmetric import gabidulin, lifted_mrd

# the (4,2,1)_2 design as listed (points numbered from 1, classes of four blocks)
PRINTED_TD = [
    {1, 5, 9}, {2, 8, 11}, {3, 6, 12}, {4, 7, 10},
    {1, 6, 10}, {2, 7, 12}, {3, 5, 11}, {4, 8, 9},
    {1, 7, 11}, {2, 6, 9}, {3, 8, 10}, {4, 5, 12},
    {1, 8, 12}, {2, 5, 10}, {3, 7, 9}, {4, 6, 11},
]

# the 16 x 12 incidence matrix as listed, row by row
PRINTED_H = """
100010001000 010000010010 001001000001 000100100100
100001000100 010000100001 001010000010 000100011000
100000100010 010001001000 001000010100 000110000001
100000010001 010010000100 001000101000 000101000010
""".split()


def _block_sets(D):
    return {frozenset(int(p) + 1 for p in b) for b in D.blocks}


def test_printed_td_matches(mrd_421):
    D = td_from_code(mrd_421)
    assert (D.num_groups, D.group_size, D.t, D.lam) == (3, 4, 2, 1)
    assert _block_sets(D) == {frozenset(b) for b in PRINTED_TD}
    P = TransversalDesign.from_block_sets(3, 4, PRINTED_TD, lam=1, base=1)
    assert verify_td(P).ok
    # the listed grouping and the coset grouping are both resolutions
    assert verify_resolvable(P, np.arange(16) // 4).ok
    assert verify_resolvable(D, parallel_classes(mrd_421)).ok


def test_printed_incidence_rows(mrd_421):
    H = incidence_matrix(mrd_421).H
    assert H.shape == (16, 12)
    assert {"".join(map(str, r)) for r in H.tolist()} == set(PRINTED_H)


def test_td_wrong_lambda_witness(mrd_421):
    rep = verify_td(td_from_code(mrd_421), 2, 2)
    assert not rep.ok and rep.counterexample == {"pair": [0, 4], "count": 1, "expected": 2}


def test_resolvable(mrd_421, mrd_842):
    for C, n in ((mrd_421, 4), (mrd_842, 256)):
        cls = parallel_classes(C)
        assert len(np.unique(cls)) == n
        assert verify_resolvable(td_from_code(C), cls).ok
    bad = np.zeros(16, dtype=int)
    assert not verify_resolvable(td_from_code(mrd_421), bad).ok


def test_delta_equals_k_strength_one():
    C = lifted_mrd(2, 6, 3, 3)
    D = td_from_code(C)
    assert D.t == 1 and D.lam == 1 and verify_td(D).ok


@pytest.mark.parametrize("params,t,lam", [((2, 6, 3, 2), 2, 1), ((3, 6, 3, 2), 2, 1),
                                          ((2, 8, 4, 2), 2, 16)])
def test_td_general(params, t, lam):
    D = td_from_code(lifted_mrd(*params))
    assert (D.t, D.lam) == (t, lam) and verify_td(D).ok
    A = td_to_oa(D)
    assert verify_oa(A).ok


def test_std_and_counts(mrd_632):
    rep = verify_std(mrd_632)
    assert rep.ok and rep.details["qualifying"] == 448
    assert verify_subspace_counts(mrd_632, 1, 8).ok
    assert not verify_subspace_counts(mrd_632, 1, 7).ok
    assert verify_std(lifted_mrd(2, 4, 2, 1)).details["qualifying"] == 16


def test_td_rejects_non_lifted():
    C = lifted_mrd(2, 6, 3, 2)
    C.gens = C.gens.copy()
    C.gens[0] = np.array([[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0]])
    with pytest.raises(ParameterError, match="not a lifted MRD code"):
        td_from_code(C)
    with pytest.raises(ParameterError):
        TransversalDesign(3, 4, [[0, 1, 8]])


def test_oa_from_rank_code():
    A = mrd_to_oa(gabidulin(2, 3, 3, 2))
    assert (A.N, A.s, A.t) == (64, 8, 2) and verify_oa(A).ok
    A.array = A.array[:-1]
    assert verify_oa(A).counterexample["kind"] == "size"
