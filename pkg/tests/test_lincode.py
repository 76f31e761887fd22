import hashlib
from fractions import Fraction

import numpy as np
import pytest

from liftmrd.errors import CapExceeded, ParameterError
from liftmrd.lincode import (analyze_C, analyze_CT, check_permutation_blocks, closed_form_bounds,
                             code_basis, emit_alist, exhaustive_min_distance, incidence_matrix,
                             parse_alist, sampled_upper_bound, spectrum_certificate,
                             tanner_bounds)
from liftmrd.designs import parallel_classes
from liftmrd.rankmetric import lifted_mrd

# regression pin: alist of the (8,4,2)_2 incidence matrix as first produced by this package
ALIST_842_SHA256 = "e06313ce118fb35e4bfe3dd581e9583f24235dbcb69f875f787d74eba1765fa9"


def test_incidence_shape_and_weights(mrd_421, mrd_842):
    inc = incidence_matrix(mrd_421)
    assert inc.H.shape == (16, 12) and (inc.kprime, inc.r, inc.m) == (3, 4, 4)
    assert (inc.H.sum(1) == 3).all() and (inc.H.sum(0) == 4).all()
    big = incidence_matrix(mrd_842)
    assert big.H.shape == (4096, 240)
    assert (big.H.sum(0) == 256).all() and (big.H.sum(1) == 15).all()
    check_permutation_blocks(inc, parallel_classes(mrd_421))  # raises on failure


def test_incidence_rejects_delta_equals_k():
    with pytest.raises(ParameterError):
        incidence_matrix(lifted_mrd(2, 4, 2, 2))


def test_brute_force_vs_closed_forms(mrd_421):
    inc = incidence_matrix(mrd_421)
    c, ct = analyze_C(inc), analyze_CT(inc)
    cf = closed_form_bounds(2, 4, 2, 1)
    assert c.min_distance >= cf["d"] and ct.min_distance >= cf["dT"]
    assert ct.min_distance >= cf["dT_intersection"]
    assert c.tanner == (Fraction(6), Fraction(5))


def test_exhaustive_sweep_small_codes():
    H = np.array([[1, 1, 0, 1, 1, 0, 0], [1, 0, 1, 1, 0, 1, 0], [0, 1, 1, 1, 0, 0, 1]], np.uint8)
    B = code_basis(H)
    d, word, even = exhaustive_min_distance(B)
    assert len(B) == 4 and d == 3 and not even and word.sum() == 3
    assert not (H.astype(int) @ word % 2).any()
    assert sampled_upper_bound(B, 500, seed=1) == 3
    with pytest.raises(CapExceeded):
        exhaustive_min_distance(np.eye(30, dtype=np.uint8), cap=1 << 10)


def test_tanner_formula():
    assert tanner_bounds(12, 4, 3, 4) == (6, 5)
    assert tanner_bounds(16, 3, 4, 4) == (4, 4)


def test_spectrum_other_codes(mrd_632):
    sp = spectrum_certificate(incidence_matrix(mrd_632))
    assert sp.ok and sp.details["eigenvalues"] == [56, 8, 0]
    assert [int(x) for x in sp.details["multiplicities"]] == [1, 49, 6]


def test_larger_code_interval(mrd_632):
    inc = incidence_matrix(mrd_632)
    c = analyze_C(inc)
    assert c.dimension == 30 and c.even_weight
    lo, hi = c.interval
    assert lo <= hi and lo >= closed_form_bounds(2, 6, 3, 2)["d"]


def test_alist_roundtrip(mrd_421):
    H = incidence_matrix(mrd_421).H
    text = emit_alist(H)
    assert text.splitlines()[:2] == ["12 16", "4 3"]
    assert np.array_equal(parse_alist(text), H)


def test_alist_pinned(mrd_842):
    text = emit_alist(incidence_matrix(mrd_842).H)
    assert hashlib.sha256(text.encode()).hexdigest() == ALIST_842_SHA256
