"""Upper bounds on constant-dimension codes and ratios against them.

Integer bounds are exact Python ints.  Ratios are ``Fraction`` values;
``to_decimal`` renders them at a chosen precision.  Quantities that
depend on an unknown A_q(n, d, k) come back as :class:`BoundValue` with
``exact=False`` and a note naming the substitution.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from .errors import ParameterError
from .grassmann import gaussian


class BoundValue(int):
    """An int carrying whether it is exact and why not."""

    def __new__(cls, value, exact=True, note=""):
        obj = super().__new__(cls, value)
        obj.exact = exact
        obj.note = note
        return obj

    def __repr__(self):
        return f"{int(self)}" + ("" if self.exact else f" ({self.note})")


def johnson_exact(q, n, k, delta):
    """[n, k-delta+1]_q / [k, k-delta+1]_q as a Fraction."""
    if not 1 <= delta <= k <= n:
        raise ParameterError(f"need 1 <= delta <= k <= n, got n={n}, k={k}, delta={delta}")
    t = k - delta + 1
    return Fraction(gaussian(n, t, q), gaussian(k, t, q))


def johnson_bound(q, n, k, delta):
    """Floor of the Johnson-type bound; ``exact`` tells whether the
    quotient was already an integer."""
    fr = johnson_exact(q, n, k, delta)
    divisible = fr.denominator == 1
    return BoundValue(fr.numerator // fr.denominator, divisible,
                      "" if divisible else "floor of a non-integer quotient")


def q_delta(q, delta, tol=Decimal("1e-12"), prec=40):
    """Q_delta(q), the infinite product over j >= delta of (1 - q^-j)."""
    if q < 2 or delta < 1:
        raise ParameterError("need q >= 2 and delta >= 1")
    with localcontext() as ctx:
        ctx.prec = prec
        prod = Decimal(1)
        j = delta
        while True:
            f = 1 - Decimal(q) ** -j
            prod *= f
            if 1 - f < tol:
                break
            j += 1
        return +prod


def to_decimal(x, places=4):
    """Round a Fraction/Decimal half-even to ``places`` decimals."""
    with localcontext() as ctx:
        ctx.prec = 50
        d = Decimal(x.numerator) / Decimal(x.denominator) if isinstance(x, Fraction) else Decimal(x)
        return d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)


def mrd_ratio(q, n, k, delta):
    """|lifted MRD| divided by the Johnson-type bound, exactly."""
    if k > n - k:
        raise ParameterError(f"lifted MRD codes assume k <= n - k (got n={n}, k={k})")
    return Fraction(q ** ((n - k) * (k - delta + 1))) / johnson_exact(q, n, k, delta)


def bound_extension_k_minus_1(q, n, k):
    """Largest code with distance 2(k-1) containing a lifted MRD code:
    q^{2(n-k)} + A_q(n-k, 2(k-2), k-1)."""
    if k < 3:
        raise ParameterError(f"need k >= 3, got {k}")
    if n - k < k - 1:
        raise ParameterError(f"need n - k >= k - 1, got n={n}, k={k}")
    base = q ** (2 * (n - k))
    if k == 3:
        return BoundValue(base + gaussian(n - 3, 2, q))
    return BoundValue(base + johnson_bound(q, n - k, k - 1, k - 2), False,
                      "upper-bounded term: A_q(n-k, 2(k-2), k-1) replaced by its Johnson bound")


def bound_extension_2k(q, n, k):
    """Largest code of dimension 2k, distance 2k, containing a lifted MRD code."""
    N = n - 2 * k
    if N < 0:
        raise ParameterError(f"need n >= 2k, got n={n}, k={k}")
    K = 2 * k
    main = Fraction(q ** (N * (k + 1))) + gaussian(N, k, q) * Fraction(q**n - q**N, q**K - q**k)
    if N < K:
        tail, exact, note = 0, True, ""
    elif N == K:
        tail, exact, note = 1, True, ""
    else:
        tail, exact, note = johnson_bound(q, N, K, k), False, \
            "upper-bounded term: A_q(n-2k, 2k, 2k) replaced by its Johnson bound"
    total = main + tail
    return BoundValue(total.numerator // total.denominator, exact and total.denominator == 1, note)


def k3_ratio_limit(q):
    """Limit over n of (q^{2(n-3)} + [n-3, 2]_q) / Johnson(q, n, 3, 2)."""
    return Fraction((q * (q * q - 1) * (q - 1) + 1) * (q * q + q + 1), q**6)


def k3_ratio(q, n):
    return Fraction(int(bound_extension_k_minus_1(q, n, 3))) / johnson_exact(q, n, 3, 2)


@dataclass
class BoundReport:
    q: int
    n: int
    k: int
    delta: int
    johnson: int
    johnson_exact: bool
    mrd: int | None
    ratio: str | None
    thmA: int | None
    thmA_exact: bool | None
    thmB: int | None
    thmB_exact: bool | None

    def as_dict(self):
        return asdict(self)


def bound_report(q, n, k, delta, places=6):
    J = johnson_bound(q, n, k, delta)
    mrd = ratio = None
    if k <= n - k:
        mrd = q ** ((n - k) * (k - delta + 1))
        ratio = str(to_decimal(mrd_ratio(q, n, k, delta), places))
    A = B = None
    if delta == k - 1 and k >= 3 and n - k >= k - 1:
        A = bound_extension_k_minus_1(q, n, k)
    # dimension 2k', distance 2k': delta = k/2 with k even
    if k % 2 == 0 and delta == k // 2 and n - k >= k // 2:
        B = bound_extension_2k(q, n, k // 2)
    return BoundReport(q, n, k, delta, int(J), J.exact, mrd, ratio,
                       None if A is None else int(A), None if A is None else A.exact,
                       None if B is None else int(B), None if B is None else B.exact)
