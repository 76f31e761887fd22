"""Constant-dimension codes and exact / sampled minimum-distance checks."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .errors import CapExceeded, ParameterError
from .fields import field
from .grassmann import Subspace, gaussian, grassmannian_array, normalized_vectors

DEFAULT_PAIR_CAP = 10**9
DEFAULT_SAMPLES = 10**6
KEY_CAP = 6 * 10**7  # sub-subspace keys held in memory at once


class ConstantDimensionCode:
    """A set of k-dimensional subspaces of GF(q)^n.

    Codewords are held as a (M, k, n) uint8 stack of RREF generators.
    ``labels`` optionally tags each codeword with a component index
    (for instance its identifying-vector class) and ``components`` names
    those components.
    """

    def __init__(self, q, n, k, gens, *, claimed_distance=None, provenance="explicit",
                 delta=None, labels=None, components=None, rank_code=None, canonical=False):
        gens = np.asarray(gens, dtype=np.uint8)
        if gens.ndim != 3 or gens.shape[1:] != (k, n):
            raise ParameterError(f"expected a (M, {k}, {n}) generator stack, got {gens.shape}")
        if not canonical:
            R, ranks = linalg.rref_batch(gens, field(q))
            bad = np.nonzero(ranks != k)[0]
            if bad.size:
                raise ParameterError(f"codeword {int(bad[0])} has dimension {int(ranks[bad[0]])}, not {k}")
            gens = R
        self.q, self.n, self.k = q, n, k
        self.gens = gens
        self.claimed_distance = claimed_distance
        self.provenance = provenance
        self.delta = delta
        self.labels = None if labels is None else np.asarray(labels, dtype=np.int32)
        self.components = list(components) if components is not None else None
        self.rank_code = rank_code
        self._keys = None

    def __len__(self):
        return len(self.gens)

    def __getitem__(self, i):
        return Subspace(self.q, self.gens[i], canonical=True)

    def __iter__(self):
        for g in self.gens:
            yield Subspace(self.q, g, canonical=True)

    def __repr__(self):
        return (f"ConstantDimensionCode(q={self.q}, n={self.n}, k={self.k}, "
                f"size={len(self)}, provenance={self.provenance!r})")

    @property
    def params(self):
        return (self.n, len(self), self.claimed_distance, self.k)

    def keys(self):
        if self._keys is None:
            self._keys = linalg.row_keys(self.gens, self.q)
        return self._keys

    def __contains__(self, S):
        if not isinstance(S, Subspace) or S.q != self.q or S.gen.shape != (self.k, self.n):
            return False
        key = linalg.row_keys(S.gen, self.q)[None, :]
        return bool(np.isin(linalg.void_view(key), linalg.void_view(self.keys()))[0])

    def isin(self, other):
        """Boolean mask: which codewords of ``self`` lie in ``other``."""
        return np.isin(linalg.void_view(self.keys()), linalg.void_view(other.keys()))

    def issubset(self, other):
        return bool(self.isin(other).all())

    def find_duplicate(self):
        """A pair of equal codewords, or None."""
        return _first_collision(self.keys(), np.arange(len(self)))

    def is_set(self):
        return self.find_duplicate() is None

    def subcode(self, idx, provenance=None):
        idx = np.asarray(idx)
        return ConstantDimensionCode(
            self.q, self.n, self.k, self.gens[idx], claimed_distance=self.claimed_distance,
            provenance=provenance or self.provenance, delta=self.delta, canonical=True)


def concat_codes(parts, *, claimed_distance=None, provenance="union", components=None):
    """Union of disjoint codes; labels record which part each codeword came from."""
    q, n, k = parts[0].q, parts[0].n, parts[0].k
    gens = np.concatenate([p.gens for p in parts])
    labels = np.concatenate([np.full(len(p), i, dtype=np.int32) for i, p in enumerate(parts)])
    return ConstantDimensionCode(q, n, k, gens, claimed_distance=claimed_distance,
                                 provenance=provenance, labels=labels,
                                 components=components, canonical=True)


# -- distance engines ---------------------------------------------------------

@dataclass
class DistanceReport:
    min_distance: int | None
    witness: tuple | None
    mode: str
    engine: str
    pairs: int
    claimed: int | None = None
    notes: list = dc_field(default_factory=list)

    @property
    def passed(self):
        if self.claimed is None:
            return True
        return self.min_distance is None or self.min_distance >= self.claimed

    @property
    def certificate(self):
        if self.pairs == 0:
            return "minimum distance infinity: fewer than two codewords"
        if self.mode == "exhaustive":
            return f"exact minimum distance {self.min_distance} over all {self.pairs} pairs"
        if self.mode == "certify":
            if self.min_distance is None:
                return f"lower bound {self.claimed} over all {self.pairs} pairs, no witness found"
            return (f"minimum distance {self.min_distance}: no smaller distance among all "
                    f"{self.pairs} pairs, witness {self.witness}")
        return (f"lower-bound certificate: no pair below {self.min_distance} "
                f"among {self.pairs} sampled pairs")

    def as_dict(self):
        return {"min_distance": self.min_distance, "witness": list(self.witness) if self.witness else None,
                "mode": self.mode, "engine": self.engine, "pairs": self.pairs,
                "claimed": self.claimed, "passed": self.passed, "certificate": self.certificate,
                "notes": self.notes}


def _first_collision(keys, owners):
    """Lexicographically least pair of distinct owners sharing a key row."""
    keys = np.asarray(keys, dtype=np.int64)
    if keys.ndim == 1:
        keys = keys[:, None]
    if len(keys) < 2:
        return None
    order = np.lexsort(keys.T[::-1])
    ks = keys[order]
    eq = np.all(ks[1:] == ks[:-1], axis=1)
    if not eq.any():
        return None
    pos = np.nonzero(eq)[0]
    a, b = owners[order[pos]], owners[order[pos + 1]]
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    best = np.lexsort((hi, lo))[0]
    return int(lo[best]), int(hi[best])


def _packed_rows_gf2(gens):
    n = gens.shape[-1]
    w = np.int64(1) << np.arange(n - 1, -1, -1, dtype=np.int64)
    return (gens.astype(np.int64) * w).sum(axis=-1)


def _foldable(q, n, t):
    return q ** (n * t) < 1 << 63


def subspace_keys(gens, q, t, fold=False):
    """Keys of every t-dimensional subspace of every codeword.

    Returns (keys, owners) with keys of shape (M * g, t), or (M * g, 1)
    when ``fold`` is set and a whole t x n generator fits one int64.
    For an RREF coefficient matrix T and RREF generator G, T @ G is
    again in RREF, so no reduction is needed.
    """
    M, k, n = gens.shape
    T = grassmannian_array(q, k, t)
    g = len(T)
    fold = fold and _foldable(q, n, t)
    width = 1 if fold else t
    keys = np.zeros((M, g, width), dtype=np.int64)
    base = np.int64(q**n)
    if q == 2:
        P = _packed_rows_gf2(gens)  # (M, k)
        for s in range(g):
            for a in range(t):
                acc = np.zeros(M, dtype=np.int64)
                for j in np.nonzero(T[s, a])[0]:
                    acc ^= P[:, j]
                if fold:
                    keys[:, s, 0] = keys[:, s, 0] * base + acc
                else:
                    keys[:, s, a] = acc
    else:
        F = field(q)
        step = max(1, (1 << 22) // (g * t * n))
        w = base ** np.arange(t - 1, -1, -1, dtype=np.int64)
        for s in range(0, M, step):
            sub = linalg.matmul(T[None], gens[s:s + step, None], F)  # (m, g, t, n)
            rk = linalg.row_keys(sub, q)
            keys[s:s + step] = (rk @ w)[..., None] if fold else rk
    owners = np.repeat(np.arange(M), g)
    return keys.reshape(M * g, width), owners


def _check_key_budget(M, k, t, q, n):
    cols = 1 if _foldable(q, n, t) else t
    if M * gaussian(k, t, q) * cols > KEY_CAP:
        raise CapExceeded(f"{M * gaussian(k, t, q)} sub-subspace keys exceed the engine limit")


def collision_min_distance(gens, q, floor=None):
    """Exact min subspace distance of a constant-dimension code.

    Walks t = k, k-1, ..., 1 and looks for two codewords sharing a
    t-dimensional subspace.  The first t with a shared subspace is the
    largest intersection dimension, so d = 2(k - t); with no sharing at
    t = 1, d = 2k.  Returns (distance, witness pair or None).

    With ``floor`` the walk stops before t = k - floor/2, returning
    (floor, None) once every larger intersection is ruled out: a proof
    of d >= floor without building the largest key set.
    """
    M, k, n = gens.shape
    pair = _first_collision(linalg.row_keys(gens, q), np.arange(M))
    if pair:
        return 0, pair
    stop = 0 if floor is None else k - floor // 2
    for t in range(k - 1, stop, -1):
        _check_key_budget(M, k, t, q, n)
        keys, owners = subspace_keys(gens, q, t, fold=True)
        pair = _first_collision(keys, owners)
        if pair:
            return 2 * (k - t), pair
    return (2 * k, None) if floor is None else (floor, None)


def _point_bitsets(gens, q):
    """Incidence bitsets of codewords against all points of PG(n-1, q)."""
    M, k, n = gens.shape
    if q**n > 1 << 24:
        raise CapExceeded("point bitsets need q^n <= 2^24")
    F = field(q)
    C = normalized_vectors(q, k)
    pts = linalg.matmul(C[None], gens, F)  # (M, P_k, n), already normalized
    vals = linalg.row_keys(pts, q)
    allpts = normalized_vectors(q, n)
    lut = np.full(q**n, -1, dtype=np.int64)
    lut[linalg.row_keys(allpts, q)] = np.arange(len(allpts))
    idx = lut[vals]
    words = -(-len(allpts) // 64)
    B = np.zeros((M, words), dtype=np.uint64)
    for c in range(idx.shape[1]):
        w, b = np.divmod(idx[:, c], 64)
        np.bitwise_or.at(B, (np.arange(M), w), np.uint64(1) << b.astype(np.uint64))
    return B


def pairwise_min_distance(gens, q):
    """Exact min distance by intersecting point sets of every pair."""
    M, k, _ = gens.shape
    B = _point_bitsets(gens, q)
    dim_of = {(q**t - 1) // (q - 1): t for t in range(k + 1)}
    best, pair = None, None
    for i in range(M - 1):
        common = np.bitwise_count(B[i] & B[i + 1:]).sum(axis=1)
        j = int(common.argmax())
        t = dim_of[int(common[j])]
        d = 2 * (k - t)
        if best is None or d < best:
            best, pair = d, (i, i + 1 + j)
    return best, pair


GAMMA = np.uint64(0x9E3779B97F4A7C15)


def splitmix64(seed, count, start=0):
    """``count`` outputs of the splitmix64 generator seeded with ``seed``,
    beginning at stream position ``start``."""
    s = np.uint64(seed & (2**64 - 1))
    with np.errstate(over="ignore"):
        z = s + np.arange(start + 1, start + count + 1, dtype=np.uint64) * GAMMA
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))


def sample_pairs(M, count, seed, start=0):
    """Deterministic ordered pairs (i, j), i != j, uniform up to modulo bias."""
    z = splitmix64(seed, 2 * count, 2 * start)
    i = (z[0::2] % np.uint64(M)).astype(np.int64)
    j = (z[1::2] % np.uint64(M - 1)).astype(np.int64)
    j += j >= i
    return i, j


def pair_distances(gens, q, i, j, chunk=1 << 17):
    F = field(q)
    k = gens.shape[1]
    out = np.empty(len(i), dtype=np.int64)
    for s in range(0, len(i), chunk):
        st = np.concatenate([gens[i[s:s + chunk]], gens[j[s:s + chunk]]], axis=1)
        out[s:s + chunk] = 2 * linalg.rank_batch(st, F) - 2 * k
    return out


def sampled_min_distance(gens, q, samples, seed):
    i, j = sample_pairs(len(gens), samples, seed)
    d = pair_distances(gens, q, i, j)
    w = int(d.argmin())
    return int(d[w]), (int(i[w]), int(j[w]))


def verify_min_subspace_distance(C, mode="exhaustive", *, samples=DEFAULT_SAMPLES, seed=0,
                                 pair_cap=DEFAULT_PAIR_CAP, engine="collision"):
    """Minimum subspace distance of a code.

    ``mode='exhaustive'`` is exact (``engine`` 'collision' or 'pairwise').
    ``mode='sampled'`` checks ``samples`` seeded pairs only.
    ``mode='certify'`` proves d >= claimed over all pairs with the
    collision engine, then looks for a witness at exactly the claimed
    distance among seeded samples; with one, the distance is exact.
    """
    M = len(C)
    claimed = C.claimed_distance
    if M < 2:
        return DistanceReport(None, None, mode, engine, 0, claimed)
    pairs = M * (M - 1) // 2
    if mode == "exhaustive":
        if pairs > pair_cap:
            raise CapExceeded(f"{pairs} pairs exceed the cap of {pair_cap}; use sampled mode "
                              "or raise the cap")
        if engine == "collision":
            d, w = collision_min_distance(C.gens, C.q)
        elif engine == "pairwise":
            d, w = pairwise_min_distance(C.gens, C.q)
        else:
            raise ParameterError(f"unknown engine {engine!r}")
        return DistanceReport(d, w, mode, engine, pairs, claimed)
    if mode == "sampled":
        d, w = sampled_min_distance(C.gens, C.q, samples, seed)
        return DistanceReport(d, w, mode, "splitmix64", samples, claimed, [f"seed={seed}"])
    if mode == "certify":
        if claimed is None or claimed % 2:
            raise ParameterError("certify mode needs an even claimed distance")
        d, w = collision_min_distance(C.gens, C.q, floor=claimed)
        if w is not None:  # a pair below the claim
            return DistanceReport(d, w, mode, "collision", pairs, claimed)
        ds, ws = sampled_min_distance(C.gens, C.q, samples, seed)
        notes = [f"no pair below {claimed} among all {pairs} pairs", f"seed={seed}"]
        if ds == claimed:
            return DistanceReport(claimed, ws, mode, "collision+splitmix64", pairs, claimed, notes)
        notes.append(f"no sampled pair at exactly {claimed}; least sampled {ds}")
        return DistanceReport(None, None, mode, "collision+splitmix64", pairs, claimed, notes)
    raise ParameterError(f"unknown mode {mode!r}")


@dataclass
class LayeredReport:
    """Exact checks inside each labelled component plus sampled
    cross-component pairs."""

    within: list
    cross: DistanceReport
    claimed: int | None

    @property
    def min_distance(self):
        ds = [r.min_distance for r in self.within if r.min_distance is not None]
        return min(ds + [self.cross.min_distance])

    @property
    def passed(self):
        return all(r.passed for r in self.within) and self.cross.passed

    def as_dict(self):
        return {"within": [r.as_dict() for r in self.within], "cross": self.cross.as_dict(),
                "min_distance": self.min_distance, "passed": self.passed}


def verify_layered(C, samples=DEFAULT_SAMPLES, seed=0, pair_cap=DEFAULT_PAIR_CAP):
    """Exhaustive distance inside every component, sampled across them."""
    if C.labels is None:
        raise ParameterError("layered verification needs component labels")
    within = []
    for lab in np.unique(C.labels):
        idx = np.nonzero(C.labels == lab)[0]
        sub = ConstantDimensionCode(C.q, C.n, C.k, C.gens[idx], claimed_distance=C.claimed_distance,
                                    canonical=True)
        r = verify_min_subspace_distance(sub, "exhaustive", pair_cap=pair_cap)
        if r.witness:
            r.witness = (int(idx[r.witness[0]]), int(idx[r.witness[1]]))
        r.notes.append(f"component {int(lab)}")
        within.append(r)
    # cross-component: rejection-sample pairs until enough straddle two components
    got_i, got_j, pos = [], [], 0
    need = samples
    while need > 0:
        batch = max(need * 2, 1024)
        i, j = sample_pairs(len(C), batch, seed, pos)
        pos += batch
        keep = C.labels[i] != C.labels[j]
        got_i.append(i[keep][:need])
        got_j.append(j[keep][:need])
        need -= len(got_i[-1])
    i, j = np.concatenate(got_i), np.concatenate(got_j)
    d = pair_distances(C.gens, C.q, i, j)
    w = int(d.argmin())
    cross = DistanceReport(int(d[w]), (int(i[w]), int(j[w])), "sampled", "splitmix64", samples,
                           C.claimed_distance, [f"seed={seed}", "cross-component pairs"])
    return LayeredReport(within, cross, C.claimed_distance)
