"""Rank-metric codes: Gabidulin MRD codes and their lifting.

A Gabidulin code of k x ell matrices over GF(q) with minimum rank
distance delta is built from the linearized polynomials of q-degree at
most k - delta with coefficients in GF(q^ell), evaluated at
g_i = x^(i-1).  Codeword row i is the coordinate vector of f(g_i).

Messages (f_0, ..., f_{k-delta}) are numbered in radix q^ell with f_0
least significant; the integer encoding of GF(q^ell) elements makes that
number a little-endian radix-q string of GF(q) coordinates.  Codewords
are therefore produced by GF(q)-combinations of a basis listed in digit
order, which is what :meth:`RankCode.matrices` does.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .errors import CapExceeded, ParameterError
from .fields import ExtensionField, field

DEFAULT_MATERIALIZE_CAP = 10**7


def span_all(basis, F, offset=None):
    """Every GF(q)-combination of the basis, index = little-endian radix q
    digits of the coefficients."""
    basis = np.asarray(basis, dtype=np.uint8)
    shape = basis.shape[1:]
    out = np.zeros((1,) + shape, dtype=np.uint8) if offset is None else \
        np.asarray(offset, dtype=np.uint8).reshape((1,) + shape).copy()
    for b in basis:
        out = np.concatenate([F.add_t[out, F.mul_t[c, b]] for c in range(F.q)])
    return out


def rank_distance(A, B, q):
    F = field(q)
    return linalg.rank(F.sub_t[np.asarray(A, dtype=np.uint8), np.asarray(B, dtype=np.uint8)], F)


@dataclass
class RankCode:
    """Set of k x ell matrices over GF(q).

    Linear codes keep a GF(q) basis (``basis``, shape (D, k, ell)) and
    enumerate lazily; explicit codes keep their matrix list.
    """

    q: int
    k: int
    ell: int
    delta: int | None
    basis: np.ndarray | None = None
    explicit: np.ndarray | None = None
    kind: str = "explicit"
    g: tuple = ()
    ext: ExtensionField | None = dc_field(default=None, repr=False)

    @property
    def dimension(self):
        return None if self.basis is None else len(self.basis)

    def __len__(self):
        return len(self.explicit) if self.basis is None else self.q ** len(self.basis)

    @property
    def size(self):
        return len(self)

    def matrices(self, cap=DEFAULT_MATERIALIZE_CAP):
        if self.basis is None:
            return self.explicit
        if len(self) > cap:
            raise CapExceeded(f"code has {len(self)} codewords, cap is {cap}")
        return span_all(self.basis, field(self.q))

    def matrix(self, index):
        """Codeword number ``index`` in message order."""
        if self.basis is None:
            return self.explicit[index]
        F = field(self.q)
        out = np.zeros((self.k, self.ell), dtype=np.uint8)
        for b in self.basis:
            index, c = divmod(index, self.q)
            out = F.add_t[out, F.mul_t[c, b]]
        return out

    def parallel_class(self, index):
        """Indices are grouped q^ell at a time: codewords sharing every
        coefficient except f_0 form one class."""
        return divmod(index, self.q**self.ell)


def _check_gabidulin(q, k, ell, delta):
    if q > 256:
        raise ParameterError(f"matrix codes support q <= 256, got {q}")
    if not 1 <= k <= ell:
        raise ParameterError(f"Gabidulin codes need 1 <= k <= ell (got k={k}, ell={ell})")
    if not 1 <= delta <= k:
        raise ParameterError(f"rank distance must satisfy 1 <= delta <= k (got {delta})")


def gabidulin(q, k, ell, delta):
    """The [k x ell, delta] Gabidulin code with g_i = x^(i-1)."""
    _check_gabidulin(q, k, ell, delta)
    field(q)
    ext = ExtensionField(q, ell)
    g = tuple(q**i for i in range(k))  # encodings of 1, x, ..., x^(k-1)
    K = k - delta + 1
    powers = [[ext.frobenius(gi, i) for gi in g] for i in range(K)]
    basis = np.zeros((K * ell, k, ell), dtype=np.uint8)
    for i in range(K):
        for j in range(ell):
            unit = q**j
            for r in range(k):
                basis[i * ell + j, r] = ext.coords(ext.mul(unit, powers[i][r]))
    return RankCode(q, k, ell, delta, basis=basis, kind="gabidulin", g=g, ext=ext)


def min_rank_distance(C, cap=DEFAULT_MATERIALIZE_CAP):
    """Exact minimum rank distance.

    For a linear code this is the least rank of a nonzero codeword;
    explicit codes are checked over all pairs.  Returns (distance, pair).
    """
    F = field(C.q)
    if C.basis is not None:
        M = C.matrices(cap)[1:]
        ranks = linalg.rank_batch(M, F)
        i = int(ranks.argmin())
        return int(ranks[i]), (0, i + 1)
    M = C.explicit
    n = len(M)
    if n * (n - 1) // 2 > cap:
        raise CapExceeded(f"{n * (n - 1) // 2} pairs exceed cap {cap}")
    best, pair = None, None
    for i in range(n - 1):
        ranks = linalg.rank_batch(F.sub_t[M[i + 1:], M[i][None]], F)
        j = int(ranks.argmin())
        if best is None or ranks[j] < best:
            best, pair = int(ranks[j]), (i, i + 1 + j)
    return best, pair


def lift(A):
    """Generator [I_k | A] of the lifted subspace (already in RREF)."""
    A = np.asarray(A, dtype=np.uint8)
    k = A.shape[-2]
    eye = np.broadcast_to(np.eye(k, dtype=np.uint8), A.shape[:-1] + (k,))
    return np.concatenate([eye, A], axis=-1)


def lift_code(C, cap=DEFAULT_MATERIALIZE_CAP):
    """Lift every codeword of a rank code; a ConstantDimensionCode."""
    from .codes import ConstantDimensionCode

    mrd = C.kind == "gabidulin"
    return ConstantDimensionCode(
        C.q, C.k + C.ell, C.k, lift(C.matrices(cap)),
        claimed_distance=2 * C.delta if C.delta else None,
        provenance="lifted-mrd" if mrd else "lifted",
        delta=C.delta, rank_code=C, canonical=True)


def lifted_mrd(q, n, k, delta, cap=DEFAULT_MATERIALIZE_CAP):
    """The lifted Gabidulin code C^MRD, an (n, q^{(n-k)(k-delta+1)}, 2 delta, k)_q code."""
    if not 1 <= k <= n - k:
        raise ParameterError(f"lifted MRD codes assume 1 <= k <= n - k (got n={n}, k={k})")
    return lift_code(gabidulin(q, k, n - k, delta), cap)


def lifted_mrd_size(q, n, k, delta):
    return q ** ((n - k) * (k - delta + 1))
