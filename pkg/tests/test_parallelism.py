import pytest

from liftmrd.errors import CapExceeded
from liftmrd.parallelism import (PRINTED_G2_4_2, Parallelism, lines_and_points,
                                 parallelism_g2_4_2, repair_parallelism, search_parallelism,
                                 verify_parallelism)


def test_printed_table_defects():
    rep = verify_parallelism(Parallelism(2, PRINTED_G2_4_2))
    kinds = {d["kind"] for d in rep.details["defects"]}
    assert not rep.ok
    assert {"duplicate-vector", "missing-vector", "not-a-subspace", "coverage"} <= kinds
    assert all(d.get("spread", 6) == 6 for d in rep.details["defects"])


def test_repair_unique_single_substitution():
    fixed, subs = repair_parallelism(Parallelism(2, PRINTED_G2_4_2))
    assert subs == [{"spread": 6, "block": 4, "replaced": "1000", "by": "1010"}]
    assert verify_parallelism(fixed).ok
    assert verify_parallelism(parallelism_g2_4_2()).ok


def test_repair_of_valid_table_is_noop():
    P = parallelism_g2_4_2()
    fixed, subs = repair_parallelism(P)
    assert subs == [] and verify_parallelism(fixed).ok


def test_detects_repeated_subspace():
    P = parallelism_g2_4_2()
    spreads = [list(s) for s in P.spreads]
    spreads[1] = list(spreads[0])
    rep = verify_parallelism(Parallelism(2, spreads))
    assert any(d["kind"] == "repeated-subspace" for d in rep.details["defects"])


@pytest.mark.parametrize("q", [2, 3])
def test_search(q):
    P = search_parallelism(q)
    assert len(P.spreads) == q * q + q + 1
    assert all(len(s) == q * q + 1 for s in P.spreads)
    assert verify_parallelism(P).ok


def test_search_node_limit():
    with pytest.raises(CapExceeded):
        search_parallelism(3, node_limit=5)


def test_lines_and_points_counts():
    L, lines, npts = lines_and_points(2)
    assert len(L) == len(lines) == 35 and npts == 15
    assert all(len(set(ln)) == 3 for ln in lines)
