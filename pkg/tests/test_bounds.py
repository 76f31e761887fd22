from decimal import Decimal
from fractions import Fraction

import pytest

from liftmrd.bounds import (BoundValue, bound_extension_2k, bound_extension_k_minus_1,
                            bound_report, johnson_bound, johnson_exact, k3_ratio, k3_ratio_limit,
                            mrd_ratio, q_delta, to_decimal)
from liftmrd.errors import ParameterError
from liftmrd.grassmann import gaussian


def test_johnson_flags():
    assert johnson_bound(2, 8, 4, 2).exact
    assert not johnson_bound(2, 14, 3, 2).exact
    assert johnson_exact(2, 14, 3, 2) == Fraction(gaussian(14, 2, 2), 7)
    with pytest.raises(ParameterError):
        johnson_bound(2, 4, 2, 3)


def test_q_delta_convergence():
    v = q_delta(2, 2)
    assert Decimal("0.5775") < v < Decimal("0.5776")
    assert q_delta(7, 5) < 1
    assert to_decimal(Fraction(1, 8), 2) == Decimal("0.12")  # half-even


def test_mrd_ratio_approaches_q_delta():
    r = mrd_ratio(2, 24, 12, 2)
    assert abs(float(r) - float(q_delta(2, 2))) < 1e-3
    assert mrd_ratio(2, 30, 3, 2) > mrd_ratio(2, 24, 12, 2)
    with pytest.raises(ParameterError):
        mrd_ratio(2, 5, 3, 2)


def test_extension_bounds():
    assert bound_extension_k_minus_1(2, 8, 3) == 1179
    assert bound_extension_k_minus_1(2, 8, 3).exact
    v = bound_extension_k_minus_1(2, 10, 4)
    assert isinstance(v, BoundValue) and not v.exact and "Johnson" in v.note
    assert bound_extension_2k(2, 8, 2) == 4797
    assert bound_extension_2k(3, 8, 2) == 3**12 + 11701
    assert bound_extension_2k(2, 7, 2) == 582
    with pytest.raises(ParameterError):
        bound_extension_k_minus_1(2, 8, 2)


def test_k3_ratio_increases_to_limit():
    vals = [k3_ratio(2, n) for n in (8, 9, 10, 11, 20)]
    assert vals == sorted(vals)
    assert all(v < k3_ratio_limit(2) for v in vals)
    assert k3_ratio_limit(2) == Fraction(49, 64)


def test_bound_report():
    r = bound_report(2, 8, 4, 2)
    assert r.johnson == 6477 and r.mrd == 4096 and r.thmB == 4797 and r.thmA is None
    r = bound_report(2, 8, 3, 2)
    assert r.thmA == 1179 and r.thmB is None
    assert bound_report(2, 5, 3, 2).mrd is None
