"""Ferrers diagrams, pending dots and Ferrers-diagram rank-metric codes.

Diagrams are right-aligned: row i of a diagram for identifying vector v
holds the non-pivot columns to the right of the i-th pivot, and tableau
column c (0 <= c < n - k) is the c-th non-pivot column of v.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import ParameterError, VerificationError
from .fields import field
from .rankmetric import gabidulin, span_all


@dataclass(frozen=True)
class FerrersDiagram:
    rows: tuple
    width: int
    iv: tuple | None = None

    def __post_init__(self):
        if any(a < b for a, b in zip(self.rows, self.rows[1:])):
            raise ParameterError(f"row lengths must be non-increasing: {self.rows}")
        if self.rows and (min(self.rows) < 0 or self.rows[0] > self.width):
            raise ParameterError("row lengths out of range")

    @classmethod
    def from_rows(cls, rows, width=None):
        rows = tuple(int(r) for r in rows)
        return cls(rows, rows[0] if width is None else width)

    @property
    def k(self):
        return len(self.rows)

    @property
    def total(self):
        return sum(self.rows)

    @property
    def below_first_row(self):
        return sum(self.rows[1:])

    def mask(self):
        m = np.zeros((self.k, self.width), dtype=bool)
        for i, r in enumerate(self.rows):
            m[i, self.width - r:] = True
        return m

    def dots(self):
        return [(i, c) for i, r in enumerate(self.rows) for c in range(self.width - r, self.width)]


def diagram_from_iv(v):
    v = tuple(int(x) for x in v)
    n = len(v)
    piv = [j for j, b in enumerate(v) if b]
    k = len(piv)
    rows = tuple(sum(1 for j in range(p + 1, n) if not v[j]) for p in piv)
    return FerrersDiagram(rows, n - k, v)


def fd_dimension_bound(F, delta=2):
    """Largest dimension of a delta = 2 rank code on a three-row diagram.

    Equals the number of dots below the first row whenever the first row
    has at least three dots; in general it is the smaller of the dots
    outside the last column and the dots outside the first row.
    """
    if F.k != 3 or delta != 2:
        raise ParameterError("bound only specified for k=3, delta=2")
    if F.iv is not None:
        n = len(F.iv)
        if n < 8 or 1 not in F.iv[:3]:
            raise ParameterError("bound only specified for k=3, delta=2, n >= 8 with a "
                                 "pivot among the first three coordinates")
    last_col = sum(1 for r in F.rows if r > 0)
    return min(F.total - last_col, F.below_first_row)


def pending_dots(F):
    """Leftmost first-row positions that can be pinned to constants.

    A first-row dot is counted when the remaining first row is still at
    least as wide as both the second row and the number of rows, which is
    what the restriction construction in :func:`build_fd_mrd` needs.
    """
    if not F.rows:
        return ()
    second = F.rows[1] if F.k > 1 else 0
    count = max(0, F.rows[0] - max(second, F.k))
    start = F.width - F.rows[0]
    return tuple((0, start + c) for c in range(count))


@dataclass
class FDCode:
    """Affine code offset + span(basis) of k x width matrices on a diagram."""

    diagram: FerrersDiagram
    delta: int
    q: int
    basis: np.ndarray
    offset: np.ndarray
    pending: dict

    @property
    def dimension(self):
        return len(self.basis)

    def __len__(self):
        return self.q ** self.dimension

    def codewords(self):
        return span_all(self.basis, field(self.q), self.offset)

    def to_json(self):
        return {"rows": list(self.diagram.rows), "width": self.diagram.width, "delta": self.delta,
                "q": self.q, "basis": self.basis.tolist(),
                "pending": [[i, c, v] for (i, c), v in sorted(self.pending.items())]}


def _systematic_mrd(q, k, w):
    """Basis of the k x w, delta = 2 Gabidulin code whose rows 2..k run
    through unit vectors: returns (D, k, w) with D = (k-1) w."""
    F = field(q)
    G = gabidulin(q, k, w, 2).basis
    D = len(G)
    R = G[:, 1:, :].reshape(D, -1)
    S = linalg.matmul(linalg.inverse(R, F), G.reshape(D, -1), F)
    return S.reshape(D, k, w)


def min_rank_weight(basis, q):
    """Least rank over nonzero codewords of span(basis), with its index."""
    F = field(q)
    if len(basis) == 0:
        return None, None
    words = span_all(basis, F)[1:]
    ranks = linalg.rank_batch(words, F)
    i = int(ranks.argmin())
    return int(ranks[i]), i + 1


def build_fd_mrd(F, q, delta=2, pending_values=()):
    """Ferrers-diagram rank code of minimum distance 2 on diagram F.

    The first len(pending_values) pending dots carry those constants in
    every codeword; the linear part is a systematic Gabidulin code of
    width (first row - pinned dots), restricted to the dots of rows 2..k.
    """
    if delta != 2:
        raise ParameterError("only delta = 2 diagram codes are built")
    pend = pending_dots(F)
    if len(pending_values) > len(pend):
        raise ParameterError(f"{len(pending_values)} pending values given, "
                             f"diagram has {len(pend)} pending dots")
    k, width = F.k, F.width
    if F.rows[0] < k:
        raise ParameterError(f"first row must hold at least {k} dots")
    w = F.rows[0] - len(pending_values)
    S = _systematic_mrd(q, k, w)
    keep = [(i - 1) * w + c for i in range(1, k) for c in range(w - F.rows[i], w)]
    basis = np.zeros((len(keep), k, width), dtype=np.uint8)
    basis[:, :, width - w:] = S[keep]
    offset = np.zeros((k, width), dtype=np.uint8)
    pinned = {}
    for (i, c), val in zip(pend, pending_values):
        if not 0 <= val < q:
            raise ParameterError(f"pending value {val} is not in GF({q})")
        offset[i, c] = val
        pinned[(i, c)] = int(val)
    code = FDCode(F, delta, q, basis, offset, pinned)
    if basis.size and (basis[:, ~F.mask()] != 0).any():
        raise VerificationError("basis leaves the diagram")
    d, idx = min_rank_weight(basis, q)
    if d is not None and d < delta:
        raise VerificationError(f"rank distance {d} < {delta}", witness=(0, idx))
    if F.k == 3 and code.dimension != min(F.total - sum(1 for r in F.rows if r), F.below_first_row):
        raise VerificationError("dimension misses the diagram bound")
    return code


def lift_fd(v, matrices):
    """Generators of the subspaces with identifying vector v whose
    tableaux are the given k x (n-k) matrices; returns (N, k, n)."""
    v = tuple(int(x) for x in v)
    n = len(v)
    piv = [j for j, b in enumerate(v) if b]
    free = [j for j, b in enumerate(v) if not b]
    M = np.asarray(matrices, dtype=np.uint8)
    k = len(piv)
    if M.shape[1:] != (k, n - k):
        raise ParameterError(f"tableaux must be {k} x {n - k}")
    out = np.zeros((len(M), k, n), dtype=np.uint8)
    out[:, np.arange(k), piv] = 1
    out[:, :, free] = M
    return out
