"""Dense linear algebra over GF(q) for q <= 256.

Matrices are numpy ``uint8`` arrays holding field ints.  Row reduction
comes in a single-matrix form (``rref``) and a batched form
(``rref_batch``) that reduces a stack of equally shaped matrices in
lock-step; the batched form carries every vectorized hot path in the
package.  GF(2) has bit-packed fast paths in both.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .fields import TABLE_Q, field

BATCH_CHUNK = 1 << 17


def _field(F):
    F = field(F) if isinstance(F, int) else F
    if F.q > TABLE_Q:
        raise ParameterError(f"matrix routines support q <= {TABLE_Q}, got {F.q}")
    return F


def as_matrix(M, q):
    """Validate and convert to a 2-D uint8 array with entries < q."""
    A = np.asarray(M)
    if A.ndim == 1 and A.size == 0:
        A = A.reshape(0, 0)
    if A.ndim != 2:
        raise ParameterError(f"expected a 2-D matrix, got shape {A.shape}")
    if A.size and (A.min() < 0 or A.max() >= q):
        raise ParameterError(f"matrix entries must lie in [0, {q})")
    return A.astype(np.uint8, copy=True)


@dataclass(frozen=True)
class Rref:
    matrix: np.ndarray
    pivots: tuple
    rank: int


def _rref_gf2(A):
    r, c = A.shape
    rows = [int("".join(map(str, row)), 2) if c else 0 for row in A.tolist()]
    pivots, rank = [], 0
    for j in range(c):
        bit = 1 << (c - 1 - j)
        hit = next((i for i in range(rank, r) if rows[i] & bit), None)
        if hit is None:
            continue
        rows[rank], rows[hit] = rows[hit], rows[rank]
        for i in range(r):
            if i != rank and rows[i] & bit:
                rows[i] ^= rows[rank]
        pivots.append(j)
        rank += 1
    out = np.zeros((r, c), dtype=np.uint8)
    for i, v in enumerate(rows):
        for j in range(c):
            out[i, j] = (v >> (c - 1 - j)) & 1
    return Rref(out, tuple(pivots), rank)


def rref(M, F):
    """Reduced row echelon form; zero rows are kept at the bottom."""
    F = _field(F)
    A = as_matrix(M, F.q)
    if F.q == 2:
        return _rref_gf2(A)
    r, c = A.shape
    pivots, rank = [], 0
    for j in range(c):
        nz = np.nonzero(A[rank:, j])[0]
        if nz.size == 0:
            continue
        i = rank + nz[0]
        A[[rank, i]] = A[[i, rank]]
        A[rank] = F.mul_t[F.inv_t[A[rank, j]], A[rank]]
        f = A[:, j].copy()
        f[rank] = 0
        A = F.sub_t[A, F.mul_t[f[:, None], A[rank][None, :]]]
        pivots.append(j)
        rank += 1
        if rank == r:
            break
    return Rref(A, tuple(pivots), rank)


def rank(M, F):
    return rref(M, F).rank


def stack(A, B):
    A, B = np.asarray(A), np.asarray(B)
    if A.shape[1] != B.shape[1]:
        raise ParameterError(f"column mismatch: {A.shape[1]} vs {B.shape[1]}")
    return np.vstack([A, B]).astype(np.uint8)


def matmul(A, B, F):
    """A @ B over GF(q)."""
    F = _field(F)
    A, B = np.asarray(A, dtype=np.uint8), np.asarray(B, dtype=np.uint8)
    if A.shape[-1] != B.shape[-2]:
        raise ParameterError(f"shape mismatch {A.shape} @ {B.shape}")
    if F.e == 1:
        return (A.astype(np.int64) @ B.astype(np.int64) % F.p).astype(np.uint8)
    out = np.zeros(A.shape[:-1] + B.shape[-1:], dtype=np.uint8)
    for t in range(A.shape[-1]):
        out = F.add_t[out, F.mul_t[A[..., t, None], B[..., t, None, :]]]
    return out


def kernel(M, F):
    """Basis (as rows) of the right nullspace {v : M v = 0}."""
    F = _field(F)
    R = rref(M, F)
    c = R.matrix.shape[1]
    free = [j for j in range(c) if j not in R.pivots]
    basis = np.zeros((len(free), c), dtype=np.uint8)
    for b, j in enumerate(free):
        basis[b, j] = 1
        for i, pj in enumerate(R.pivots):
            basis[b, pj] = F.neg_t[R.matrix[i, j]]
    return basis


def inverse(M, F):
    F = _field(F)
    A = as_matrix(M, F.q)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ParameterError("inverse needs a square matrix")
    R = rref(np.hstack([A, np.eye(n, dtype=np.uint8)]), F)
    if R.pivots[:n] != tuple(range(n)) or R.rank < n:
        raise ParameterError("matrix is singular")
    return R.matrix[:, n:]


# -- batched reduction ------------------------------------------------------

def _pack_gf2(Ms):
    c = Ms.shape[-1]
    w = (np.uint64(1) << np.arange(c - 1, -1, -1, dtype=np.uint64))
    return (Ms.astype(np.uint64) * w).sum(axis=-1, dtype=np.uint64)


def _unpack_gf2(P, c):
    shifts = np.arange(c - 1, -1, -1, dtype=np.uint64)
    return ((P[..., None] >> shifts) & np.uint64(1)).astype(np.uint8)


def _rref_batch_gf2(P, c):
    B, r = P.shape
    rank = np.zeros(B, dtype=np.int64)
    rows = np.arange(r)
    allb = np.arange(B)
    for j in range(c):
        bit = np.uint64(1) << np.uint64(c - 1 - j)
        hasbit = (P & bit) != 0
        cand = hasbit & (rows[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = allb[has]
        piv = cand[b].argmax(axis=1)
        rk = rank[b]
        top, pv = P[b, rk].copy(), P[b, piv].copy()
        P[b, rk], P[b, piv] = pv, top
        hit = (P[b] & bit) != 0
        hit[np.arange(b.size), rk] = False
        P[b] ^= np.where(hit, pv[:, None], np.uint64(0))
        rank[b] += 1
    return P, rank


def _rref_batch_generic(A, F):
    B, r, c = A.shape
    rank = np.zeros(B, dtype=np.int64)
    rows = np.arange(r)
    allb = np.arange(B)
    for j in range(c):
        cand = (A[:, :, j] != 0) & (rows[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = allb[has]
        piv = cand[b].argmax(axis=1)
        rk = rank[b]
        top, pv = A[b, rk].copy(), A[b, piv].copy()
        A[b, piv], A[b, rk] = top, pv
        pv = F.mul_t[F.inv_t[pv[:, j]][:, None], pv]
        A[b, rk] = pv
        f = A[b, :, j].copy()
        f[np.arange(b.size), rk] = 0
        A[b] = F.sub_t[A[b], F.mul_t[f[:, :, None], pv[:, None, :]]]
        rank[b] += 1
    return A, rank


def rref_batch(Ms, F):
    """Row-reduce a stack (B, r, c); returns (reduced stack, ranks)."""
    F = _field(F)
    Ms = np.asarray(Ms, dtype=np.uint8)
    if Ms.ndim != 3:
        raise ParameterError(f"expected a (B, r, c) stack, got shape {Ms.shape}")
    B, r, c = Ms.shape
    out = np.empty_like(Ms)
    ranks = np.empty(B, dtype=np.int64)
    for s in range(0, B, BATCH_CHUNK):
        chunk = Ms[s:s + BATCH_CHUNK]
        if F.q == 2 and c <= 64:
            P, rk = _rref_batch_gf2(_pack_gf2(chunk), c)
            out[s:s + BATCH_CHUNK] = _unpack_gf2(P, c)
        else:
            R, rk = _rref_batch_generic(chunk.copy(), F)
            out[s:s + BATCH_CHUNK] = R
        ranks[s:s + BATCH_CHUNK] = rk
    return out, ranks


def rank_batch(Ms, F):
    """Ranks of a stack of matrices."""
    F = _field(F)
    Ms = np.asarray(Ms, dtype=np.uint8)
    if F.q == 2 and Ms.shape[-1] <= 64:
        ranks = np.empty(Ms.shape[0], dtype=np.int64)
        for s in range(0, Ms.shape[0], BATCH_CHUNK):
            _, ranks[s:s + BATCH_CHUNK] = _rref_batch_gf2(
                _pack_gf2(Ms[s:s + BATCH_CHUNK]), Ms.shape[-1])
        return ranks
    return rref_batch(Ms, F)[1]


# -- row keys ---------------------------------------------------------------

def row_keys(Ms, q):
    """Pack each row into an int64, first column most significant."""
    Ms = np.asarray(Ms)
    c = Ms.shape[-1]
    if q**c >= 1 << 63:
        raise ParameterError(f"rows of length {c} over GF({q}) do not fit a 64-bit key")
    w = q ** np.arange(c - 1, -1, -1, dtype=np.int64)
    return (Ms.astype(np.int64) * w).sum(axis=-1)


def keys_to_rows(keys, q, c):
    keys = np.asarray(keys, dtype=np.int64)
    w = q ** np.arange(c - 1, -1, -1, dtype=np.int64)
    return ((keys[..., None] // w) % q).astype(np.uint8)


def void_view(keys):
    """View an (N, r) int64 array as N opaque records for np.unique/isin."""
    keys = np.ascontiguousarray(keys, dtype=np.int64)
    return keys.view(np.dtype((np.void, 8 * keys.shape[1]))).ravel()


# -- GF(2) bit-packed matrices of arbitrary width ----------------------------

def gf2_pack(M):
    """(r, c) 0/1 matrix -> (r, ceil(c/64)) uint64 words, column 0 first."""
    M = np.asarray(M, dtype=np.uint8)
    r, c = M.shape
    W = max(1, -(-c // 64))
    padded = np.zeros((r, W * 64), dtype=np.uint8)
    padded[:, :c] = M
    bits = np.packbits(padded, axis=1, bitorder="little")
    return bits.view(np.uint64).reshape(r, W).copy()


def gf2_unpack(P, c):
    P = np.ascontiguousarray(P, dtype=np.uint64)
    bits = np.unpackbits(P.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :c]


def gf2_rref_packed(P, c):
    """In-place style RREF of packed rows; returns (rows, pivots)."""
    P = P.copy()
    r = P.shape[0]
    pivots, rank = [], 0
    for j in range(c):
        w, bit = divmod(j, 64)
        mask = np.uint64(1) << np.uint64(bit)
        col = (P[rank:, w] & mask) != 0
        if not col.any():
            continue
        i = rank + int(col.argmax())
        if i != rank:
            P[[rank, i]] = P[[i, rank]]
        hit = (P[:, w] & mask) != 0
        hit[rank] = False
        P[hit] ^= P[rank]
        pivots.append(j)
        rank += 1
        if rank == r:
            break
    return P[:rank], pivots


def gf2_rank(M):
    M = np.asarray(M, dtype=np.uint8)
    return len(gf2_rref_packed(gf2_pack(M), M.shape[1])[1])


def gf2_kernel(M):
    """Right nullspace basis of a 0/1 matrix, as a (d, c) 0/1 array."""
    M = np.asarray(M, dtype=np.uint8)
    c = M.shape[1]
    R, pivots = gf2_rref_packed(gf2_pack(M), c)
    dense = gf2_unpack(R, c)
    free = np.setdiff1d(np.arange(c), pivots)
    basis = np.zeros((free.size, c), dtype=np.uint8)
    basis[np.arange(free.size), free] = 1
    if pivots:
        basis[:, pivots] = dense[:, free].T
    return basis


# -- text form --------------------------------------------------------------

def matrix_to_text(M, q):
    """Rows joined by ';'.  Entries are single digits when q < 10, else
    space separated."""
    M = np.asarray(M)
    sep = "" if q < 10 else " "
    return ";".join(sep.join(str(int(x)) for x in row) for row in M)


def matrix_from_text(s, q):
    rows = s.strip().split(";")
    if q < 10:
        data = [[int(ch) for ch in row] for row in rows]
    else:
        data = [[int(t) for t in row.split()] for row in rows]
    if len({len(r) for r in data}) > 1:
        raise ParameterError("ragged matrix text")
    return as_matrix(data, q)
