"""Subspaces of GF(q)^n in canonical reduced echelon form.

A :class:`Subspace` stores its RREF generator; two subspaces are equal
exactly when their generators are byte-identical.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from . import linalg
from .errors import CapExceeded, ParameterError
from .fields import field

DEFAULT_ENUM_CAP = 10**7


@lru_cache(maxsize=None)
def gaussian(n, k, q):
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


class Subspace:
    """A k-dimensional subspace of GF(q)^n, k >= 1."""

    __slots__ = ("q", "gen", "_hash")

    def __init__(self, q, gen, *, canonical=False):
        gen = np.asarray(gen, dtype=np.uint8)
        if not canonical:
            R = linalg.rref(gen, q)
            if R.rank == 0:
                raise ParameterError("rows span the zero subspace")
            gen = R.matrix[: R.rank]
        gen = gen.copy()
        gen.flags.writeable = False
        self.q = q
        self.gen = gen
        self._hash = hash((q, gen.shape, gen.tobytes()))

    @property
    def n(self):
        return self.gen.shape[1]

    @property
    def k(self):
        return self.gen.shape[0]

    dim = k

    @property
    def field(self):
        return field(self.q)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.q == other.q
                and self.gen.shape == other.gen.shape
                and self.gen.tobytes() == other.gen.tobytes())

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Subspace(q={self.q}, {self.to_text()})"

    def key(self):
        return tuple(linalg.row_keys(self.gen, self.q).tolist())

    @property
    def pivots(self):
        return tuple(int(j) for j in (self.gen != 0).argmax(axis=1))

    def identifying_vector(self):
        v = [0] * self.n
        for j in self.pivots:
            v[j] = 1
        return tuple(v)

    def ferrers_tableaux(self):
        """Entries of the non-pivot columns right of each pivot, row by row."""
        piv = self.pivots
        out = []
        for i, p in enumerate(piv):
            cols = [j for j in range(p + 1, self.n) if j not in piv]
            out.append(tuple(int(self.gen[i, j]) for j in cols))
        return tuple(out)

    def vectors(self):
        """All q^k vectors, ordered by coefficient tuple (radix, first row major)."""
        C = np.array(list(itertools.product(range(self.q), repeat=self.k)), dtype=np.uint8)
        return linalg.matmul(C, self.gen, self.q)

    def points(self):
        """Normalized nonzero vectors, one per 1-dim subspace."""
        V = self.vectors()[1:]
        lead = V[np.arange(V.shape[0]), (V != 0).argmax(axis=1)]
        return V[lead == 1]

    def contains(self, v):
        v = np.asarray(v, dtype=np.uint8).reshape(1, -1)
        return linalg.rank(linalg.stack(self.gen, v), self.q) == self.k

    def distance(self, other):
        return subspace_distance(self, other)

    def intersection_dim(self, other):
        return self.k + other.k - linalg.rank(linalg.stack(self.gen, other.gen), self.q)

    def to_text(self):
        sep = "" if self.q < 10 else " "
        rows = ";".join(sep.join(map(str, r)) for r in self.ferrers_tableaux())
        return "".join(map(str, self.identifying_vector())) + ":" + rows

    def to_json(self):
        return {"n": self.n, "k": self.k, "rows": self.gen.tolist()}


def subspace_from_rows(q, n, rows):
    """Canonical subspace spanned by the given vectors."""
    M = linalg.as_matrix(np.asarray(rows).reshape(-1, n), q)
    return Subspace(q, M)


def subspace_from_json(q, obj):
    return subspace_from_rows(q, obj["n"], obj["rows"])


def subspace_from_text(q, s):
    """Inverse of :meth:`Subspace.to_text`."""
    iv, _, body = s.strip().partition(":")
    n = len(iv)
    piv = [j for j, ch in enumerate(iv) if ch == "1"]
    rows = body.split(";") if piv else []
    if len(rows) != len(piv):
        raise ParameterError("tableau row count does not match the identifying vector")
    gen = np.zeros((len(piv), n), dtype=np.uint8)
    for i, (p, row) in enumerate(zip(piv, rows)):
        vals = [int(c) for c in row] if q < 10 else [int(t) for t in row.split()]
        cols = [j for j in range(p + 1, n) if j not in piv]
        if len(vals) != len(cols):
            raise ParameterError(f"tableau row {i} has {len(vals)} entries, expected {len(cols)}")
        gen[i, p] = 1
        gen[i, cols] = vals
    return Subspace(q, linalg.as_matrix(gen, q))


def subspace_distance(X, Y):
    """d_S(X, Y) = dim X + dim Y - 2 dim(X ∩ Y)."""
    if X.q != Y.q or X.n != Y.n:
        raise ParameterError("subspaces live in different ambient spaces")
    r = linalg.rank(linalg.stack(X.gen, Y.gen), X.q)
    return 2 * r - X.k - Y.k


def identifying_vectors(n, k):
    """All weight-k binary vectors of length n in lexicographic order."""
    out = []
    for piv in itertools.combinations(range(n), k):
        v = [0] * n
        for j in piv:
            v[j] = 1
        out.append(tuple(v))
    return sorted(out)


def echelon_cell(q, iv):
    """All RREF generators with identifying vector iv, as a (N, k, n) array
    ordered lexicographically by the row-major tableau entries."""
    n = len(iv)
    piv = [j for j, b in enumerate(iv) if b]
    k = len(piv)
    free = [(i, j) for i, p in enumerate(piv) for j in range(p + 1, n) if j not in piv]
    N = q ** len(free)
    out = np.zeros((N, k, n), dtype=np.uint8)
    out[:, np.arange(k), piv] = 1
    if free:
        idx = np.arange(N, dtype=np.int64)
        for t, (i, j) in enumerate(free):
            out[:, i, j] = (idx // q ** (len(free) - 1 - t)) % q
    return out


def grassmannian_array(q, n, k, cap=DEFAULT_ENUM_CAP):
    total = gaussian(n, k, q)
    if total > cap:
        raise CapExceeded(f"G_{q}({n},{k}) has {total} elements, cap is {cap}")
    if k == 0:
        return np.zeros((1, 0, n), dtype=np.uint8)
    return np.concatenate([echelon_cell(q, iv) for iv in identifying_vectors(n, k)])


def enumerate_grassmannian(q, n, k, cap=DEFAULT_ENUM_CAP):
    """Iterate G_q(n, k) ordered by (identifying vector, tableau entries)."""
    if k < 1 or k > n:
        raise ParameterError(f"need 1 <= k <= n, got n={n}, k={k}")
    for g in grassmannian_array(q, n, k, cap):
        yield Subspace(q, g, canonical=True)


def normalized_vectors(q, k):
    """Nonzero vectors of GF(q)^k with first nonzero entry 1, by radix value."""
    V = np.array(list(itertools.product(range(q), repeat=k)), dtype=np.uint8)[1:]
    lead = V[np.arange(V.shape[0]), (V != 0).argmax(axis=1)]
    return V[lead == 1]


class PointIndex:
    """Canonical numbering of the points of GF(q)^n outside V_0.

    V_0 is the set of points whose first k coordinates vanish.  The other
    points fall into groups V_A, one per normalized prefix A in GF(q)^k;
    groups are ordered by the radix value of A and, inside a group,
    points are ordered by the radix value of their last n - k entries.
    Point index = group * q**(n-k) + suffix value.
    """

    def __init__(self, q, n, k):
        if not 1 <= k < n:
            raise ParameterError(f"need 1 <= k < n, got n={n}, k={k}")
        self.q, self.n, self.k = q, n, k
        self.prefixes = normalized_vectors(q, k)
        self.group_size = q ** (n - k)
        self.num_groups = len(self.prefixes)
        self.num_points = self.num_groups * self.group_size
        self._group_of = {tuple(a): g for g, a in enumerate(self.prefixes.tolist())}
        self._pw = q ** np.arange(n - k - 1, -1, -1, dtype=np.int64)
        self._ppw = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
        lut = np.full(q**k, -1, dtype=np.int64)
        lut[(self.prefixes.astype(np.int64) * self._ppw).sum(axis=1)] = np.arange(self.num_groups)
        self._lut = lut

    def classify(self, v):
        """Group label of a point: the prefix tuple, or 'V0'."""
        v = np.asarray(v)
        pre = v[: self.k]
        if not pre.any():
            return "V0"
        F = field(self.q)
        lead = pre[np.nonzero(pre)[0][0]]
        return tuple(int(x) for x in F.mul_t[F.inv_t[lead], pre])

    def index_of(self, V):
        """Indices of normalized vectors (..., n); -1 for points of V_0."""
        V = np.asarray(V)
        g = self._lut[(V[..., : self.k].astype(np.int64) * self._ppw).sum(axis=-1)]
        s = (V[..., self.k:].astype(np.int64) * self._pw).sum(axis=-1)
        return np.where(g >= 0, g * self.group_size + s, -1)

    def point(self, i):
        g, s = divmod(int(i), self.group_size)
        suffix = [(s // self.q ** (self.n - self.k - 1 - t)) % self.q for t in range(self.n - self.k)]
        return tuple(int(x) for x in self.prefixes[g]) + tuple(suffix)

    def groups(self):
        return {tuple(int(x) for x in a): range(g * self.group_size, (g + 1) * self.group_size)
                for g, a in enumerate(self.prefixes)}


def enumerate_points(q, n, k):
    """Points of GF(q)^n partitioned as {prefix A: [points]} plus 'V0'."""
    P = PointIndex(q, n, k)
    out = {a: [P.point(i) for i in r] for a, r in P.groups().items()}
    rest = normalized_vectors(q, n - k)
    out["V0"] = [(0,) * k + tuple(int(x) for x in v) for v in rest]
    return out

