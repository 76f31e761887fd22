"""Transversal designs, subspace transversal designs and orthogonal
arrays carried by lifted MRD codes.

Points are the 1-subspaces of GF(q)^n outside V_0, numbered by
:class:`~liftmrd.grassmann.PointIndex`; group g holds the points whose
first k coordinates normalize to the g-th prefix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .codes import subspace_keys
from .errors import CapExceeded, ParameterError
from .fields import field
from .grassmann import PointIndex, gaussian, grassmannian_array, normalized_vectors
from .report import Report

DEFAULT_STD_CAP = 10**7


@dataclass
class TransversalDesign:
    """Blocks as an (M, K) int array: entry g is the block's point in group g.

    Point p belongs to group p // m.  ``t`` and ``lam`` are the claimed
    strength and index; ``lam`` is None when no index is claimed.
    """

    num_groups: int
    group_size: int
    blocks: np.ndarray
    t: int = 2
    lam: int | None = None

    def __post_init__(self):
        self.blocks = np.asarray(self.blocks, dtype=np.int64)
        B = self.blocks
        if B.ndim != 2 or B.shape[1] != self.num_groups:
            raise ParameterError(f"blocks must be (M, {self.num_groups})")
        if len(B) and ((B // self.group_size) != np.arange(self.num_groups)).any():
            i = int(np.nonzero(((B // self.group_size) != np.arange(self.num_groups)).any(1))[0][0])
            raise ParameterError(f"block {i} does not meet every group exactly once")

    @property
    def num_points(self):
        return self.num_groups * self.group_size

    @classmethod
    def from_block_sets(cls, num_groups, group_size, blocks, t=2, lam=None, base=0):
        """Build from unordered point sets; ``base`` is the first point label."""
        rows = [sorted(p - base for p in b) for b in blocks]
        return cls(num_groups, group_size, np.array(rows, dtype=np.int64), t, lam)

    def local(self):
        """Within-group point index of each block entry."""
        return self.blocks % self.group_size


def block_points(gens, q, index):
    """Point indices of each codeword, shape (M, [k,1]_q), sorted per row."""
    F = field(q)
    M, k, n = gens.shape
    C = normalized_vectors(q, k)
    P = linalg.matmul(C[None], gens, F)  # (M, K, n)
    lead = P[np.arange(M)[:, None], np.arange(len(C))[None], (P != 0).argmax(axis=-1)]
    P = F.mul_t[F.inv_t[lead][..., None], P]
    return np.sort(index.index_of(P), axis=1)


def _lam(q, n, k, delta):
    e = (n - k) * (k - delta - 1)
    return q**e if e >= 0 else None


def td_from_code(C):
    """The transversal design of a lifted MRD code (blocks in code order)."""
    q, n, k = C.q, C.n, C.k
    if not 1 <= k <= n - k:
        raise ParameterError(f"not a lifted MRD code: need 1 <= k <= n - k (n={n}, k={k})")
    idx = PointIndex(q, n, k)
    P = block_points(C.gens, q, idx)
    bad = np.nonzero((P < 0).any(axis=1))[0]
    if bad.size:
        raise ParameterError(f"not a lifted MRD code: codeword {int(bad[0])} contains a V0 point")
    delta = C.delta
    if delta is None:
        return TransversalDesign(idx.num_groups, idx.group_size, P, 2, None)
    lam = _lam(q, n, k, delta)
    if lam is None:
        # delta = k: only the strength-1 statement (replication number) holds
        return TransversalDesign(idx.num_groups, idx.group_size, P, 1, q ** ((n - k) * (k - delta)))
    return TransversalDesign(idx.num_groups, idx.group_size, P, 2, lam)


def verify_td(D, t=None, lam=None):
    """Block-centric tally of point (t=1) or cross-group pair (t=2) coverage."""
    t = D.t if t is None else t
    lam = D.lam if lam is None else lam
    m, K = D.group_size, D.num_groups
    params = {"groups": K, "group_size": m, "blocks": len(D.blocks), "t": t, "lambda": lam}
    if t == 1:
        counts = np.bincount(D.blocks.ravel(), minlength=D.num_points)
        bad = np.nonzero(counts != lam)[0]
        if bad.size:
            p = int(bad[0])
            return Report("fail", params, {"point": p, "count": int(counts[p]), "expected": lam})
        return Report("pass", params)
    if t != 2:
        raise ParameterError("transversal designs are verified for t in {1, 2}")
    L = D.local()
    for g, h in itertools.combinations(range(K), 2):
        counts = np.bincount(L[:, g] * m + L[:, h], minlength=m * m)
        bad = np.nonzero(counts != lam)[0]
        if bad.size:
            a, b = divmod(int(bad[0]), m)
            return Report("fail", params, {"pair": [g * m + a, h * m + b],
                                           "count": int(counts[bad[0]]), "expected": lam})
    return Report("pass", params, details={"group_pairs": K * (K - 1) // 2})


def parallel_classes(C):
    """Class index of each codeword of a lifted Gabidulin code."""
    R = C.rank_code
    if R is None or R.basis is None:
        raise ParameterError("parallel classes need the underlying linear rank code")
    return np.arange(len(C)) // R.q**R.ell


def verify_resolvable(D, classes):
    """Every class must cover each point exactly once."""
    classes = np.asarray(classes)
    labels = np.unique(classes)
    params = {"classes": len(labels), "blocks": len(D.blocks)}
    for c in labels:
        counts = np.bincount(D.blocks[classes == c].ravel(), minlength=D.num_points)
        bad = np.nonzero(counts != 1)[0]
        if bad.size:
            p = int(bad[0])
            return Report("fail", params, {"class": int(c), "point": p, "count": int(counts[p])})
    return Report("pass", params)


def _qualifying(q, n, k, t, cap):
    """Keys of t-subspaces of GF(q)^n meeting V_0 trivially."""
    if gaussian(n, t, q) > cap:
        raise CapExceeded(f"G_{q}({n},{t}) has {gaussian(n, t, q)} elements, cap is {cap}")
    G = grassmannian_array(q, n, t)
    ok = linalg.rank_batch(G[:, :, :k], field(q)) == t
    return linalg.row_keys(G[ok], q)


def verify_subspace_counts(C, t, expected, cap=DEFAULT_STD_CAP):
    """Each t-subspace meeting V_0 trivially lies in exactly ``expected`` codewords."""
    q, n, k = C.q, C.n, C.k
    params = {"q": q, "n": n, "k": k, "t": t, "expected": expected}
    if len(C) * gaussian(k, t, q) > cap:
        raise CapExceeded(f"{len(C) * gaussian(k, t, q)} sub-subspace keys exceed cap {cap}")
    keys, owners = subspace_keys(C.gens, q, t)
    qual = _qualifying(q, n, k, t, cap)
    uk, counts = np.unique(linalg.void_view(keys), return_counts=True)
    uq = np.unique(linalg.void_view(qual))
    stray = ~np.isin(uk, uq)
    if stray.any():
        return Report("fail", params, {"kind": "block-subspace-meets-V0",
                                       "key": np.frombuffer(uk[stray][0], np.int64).tolist()})
    covered = np.isin(uq, uk)
    if not covered.all():
        return Report("fail", params, {"kind": "uncovered",
                                       "key": np.frombuffer(uq[~covered][0], np.int64).tolist()})
    bad = np.nonzero(counts != expected)[0]
    if bad.size:
        return Report("fail", params, {"kind": "multiplicity", "count": int(counts[bad[0]]),
                                       "key": np.frombuffer(uk[bad[0]], np.int64).tolist()})
    return Report("pass", params, details={"qualifying": len(uq)})


def verify_std(C, t=None, cap=DEFAULT_STD_CAP):
    """Subspace transversal design check with t = k - delta + 1 by default."""
    if t is None:
        if C.delta is None:
            raise ParameterError("t not given and code has no delta")
        t = C.k - C.delta + 1
    return verify_subspace_counts(C, t, 1, cap)


@dataclass
class OrthogonalArray:
    array: np.ndarray  # (N, columns) symbols in range(s)
    s: int
    t: int
    lam: int

    @property
    def N(self):
        return len(self.array)


def td_to_oa(D):
    lam = D.lam if D.t == 2 else None
    return OrthogonalArray(D.local(), D.group_size, 2, lam)


def verify_oa(A, t=None, lam=None):
    t = A.t if t is None else t
    lam = A.lam if lam is None else lam
    N, cols = A.array.shape
    params = {"N": N, "columns": cols, "s": A.s, "t": t, "lambda": lam}
    if t > cols:
        raise ParameterError(f"strength {t} exceeds {cols} columns")
    if lam is None or N != lam * A.s**t:
        return Report("fail", params, {"kind": "size", "N": N, "expected": None if lam is None
                                       else lam * A.s**t})
    arr = A.array.astype(np.int64)
    w = A.s ** np.arange(t - 1, -1, -1, dtype=np.int64)
    for cs in itertools.combinations(range(cols), t):
        counts = np.bincount(arr[:, cs] @ w, minlength=A.s**t)
        bad = np.nonzero(counts != lam)[0]
        if bad.size:
            tup = [(int(bad[0]) // int(x)) % A.s for x in w]
            return Report("fail", params, {"columns": list(cs), "tuple": tup,
                                           "count": int(counts[bad[0]])})
    return Report("pass", params)


def mrd_to_oa(R, cap=10**7):
    """Rows of each codeword read as GF(q^ell) symbols; an
    OA_1(q^{ell(k-delta+1)}, k, q^ell, k-delta+1)."""
    words = R.matrices(cap)
    syms = linalg.row_keys(words, R.q)
    return OrthogonalArray(syms, R.q**R.ell, R.k - R.delta + 1, 1)
