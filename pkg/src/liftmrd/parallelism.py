"""2-spreads and 2-parallelisms of GF(q)^4.

A parallelism is a list of spreads; a spread is a list of blocks; a
block is the tuple of its listed nonzero vectors.  Keeping blocks as
vector lists (rather than canonical subspaces) lets malformed input be
described and diagnosed instead of rejected on load.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import CapExceeded, ParameterError
from .fields import field
from .grassmann import Subspace, gaussian, grassmannian_array, normalized_vectors
from .report import Report

_T = [
    ["1000 0100 1100", "1010 0101 1111", "1011 0110 1101", "1001 0111 1110", "0010 0001 0011"],
    ["1000 0010 1010", "0100 0001 0101", "1011 0111 1100", "1001 0110 1111", "1101 0011 1110"],
    ["1000 0110 1110", "1001 0100 1101", "1100 0011 1111", "0101 0010 0111", "1010 0001 1011"],
    ["1000 0001 1001", "1011 0100 1111", "1100 0010 1110", "1010 0111 1101", "0101 0011 0110"],
    ["1000 0101 1101", "0100 0011 0111", "1010 0110 1100", "1001 0010 1011", "1110 0001 1111"],
    ["1000 0111 1111", "0100 0010 0110", "1100 0001 1101", "1000 0011 1001", "1011 0101 1110"],
    ["1000 0011 1011", "1010 0100 1110", "1001 0101 1100", "1101 0010 1111", "0110 0001 0111"],
]

# The commonly reproduced listing of a 2-parallelism of G_2(4,2), kept
# verbatim including its defect in the sixth spread.
PRINTED_G2_4_2 = [[tuple(tuple(int(c) for c in v) for v in blk.split()) for blk in row] for row in _T]


def _vstr(v):
    return "".join(map(str, v))


@dataclass
class Parallelism:
    q: int
    spreads: list

    def blocks(self):
        return [b for s in self.spreads for b in s]

    def subspaces(self):
        """Spreads as lists of canonical Subspace objects."""
        return [[Subspace(self.q, np.array(b, dtype=np.uint8)) for b in s] for s in self.spreads]

    def to_json(self):
        return {"q": self.q, "spreads": [[[_vstr(v) for v in b] for b in s] for s in self.spreads]}


def verify_parallelism(P, q=None):
    """Check every block is a 2-subspace, every spread covers the nonzero
    vectors of GF(q)^4 once, and every 2-subspace lies in one spread."""
    q = q or P.q
    F = field(q)
    nonzero = [v for v in itertools.product(range(q), repeat=4) if any(v)]
    defects = []
    seen = {}
    for si, spread in enumerate(P.spreads, 1):
        counts = {}
        for blk in spread:
            for v in blk:
                counts[v] = counts.get(v, 0) + 1
        for v in nonzero:
            c = counts.get(v, 0)
            if c > 1:
                defects.append({"kind": "duplicate-vector", "spread": si, "vector": _vstr(v), "count": c})
        for v in nonzero:
            if v not in counts:
                defects.append({"kind": "missing-vector", "spread": si, "vector": _vstr(v)})
        for bi, blk in enumerate(spread, 1):
            M = np.array(blk, dtype=np.uint8)
            if linalg.rank(M, F) != 2 or len(set(blk)) != q * q - 1:
                defects.append({"kind": "not-a-subspace", "spread": si, "block": bi})
                continue
            S = Subspace(q, M)
            span = {tuple(int(x) for x in v) for v in S.vectors()[1:]}
            if span != set(blk):
                defects.append({"kind": "not-a-subspace", "spread": si, "block": bi})
                continue
            seen.setdefault(S, []).append((si, bi))
    total = gaussian(4, 2, q)
    for S, where in seen.items():
        if len(where) > 1:
            defects.append({"kind": "repeated-subspace", "where": where, "subspace": S.to_text()})
    if len(seen) != total:
        defects.append({"kind": "coverage", "distinct_subspaces": len(seen), "expected": total})
    if len(P.spreads) != q * q + q + 1:
        defects.append({"kind": "spread-count", "found": len(P.spreads), "expected": q * q + q + 1})
    return Report("pass" if not defects else "fail",
                  {"q": q, "spreads": len(P.spreads)},
                  defects[0] if defects else None, {"defects": defects})


def repair_parallelism(P):
    """Find single-vector substitutions that turn P into a valid parallelism.

    For each spread with a duplicated vector, every occurrence of the
    duplicate is tried against every missing vector; returns
    (repaired parallelism, list of substitutions) when exactly one
    candidate verifies, else raises ParameterError.
    """
    rep = verify_parallelism(P)
    if rep.ok:
        return P, []
    fixes = []
    spreads = [list(s) for s in P.spreads]
    for si, spread in enumerate(spreads):
        vs = [v for blk in spread for v in blk]
        dup = sorted({v for v in vs if vs.count(v) > 1})
        if not dup:
            continue
        missing = sorted(v for v in itertools.product(range(P.q), repeat=4) if any(v) and v not in vs)
        good = []
        for d in dup:
            for bi, blk in enumerate(spread):
                if d not in blk:
                    continue
                for m in missing:
                    cand = tuple(m if v == d else v for v in blk)
                    trial = [list(s) for s in spreads]
                    trial[si][bi] = cand
                    if not any(x["spread"] == si + 1 for x in
                               verify_parallelism(Parallelism(P.q, trial)).details["defects"]
                               if "spread" in x):
                        good.append((bi, d, m, cand))
        if len(good) != 1:
            raise ParameterError(f"spread {si + 1}: {len(good)} candidate repairs, need exactly one")
        bi, d, m, cand = good[0]
        spreads[si][bi] = cand
        fixes.append({"spread": si + 1, "block": bi + 1, "replaced": _vstr(d), "by": _vstr(m)})
    out = Parallelism(P.q, spreads)
    final = verify_parallelism(out)
    if not final.ok:
        raise ParameterError(f"repair did not yield a parallelism: {final.counterexample}")
    return out, fixes


def parallelism_g2_4_2():
    """The listed parallelism of G_2(4,2) after mechanical repair."""
    return repair_parallelism(Parallelism(2, PRINTED_G2_4_2))[0]


# -- exact cover --------------------------------------------------------------

def _exact_cover(X, Y, limit, stats):
    """Knuth's Algorithm X on dict-of-sets; columns chosen by fewest
    candidates, rows tried in sorted order.  Yields row lists."""
    sol = []

    def select(r):
        cols = []
        for j in Y[r]:
            for i in X[j]:
                for c in Y[i]:
                    if c != j:
                        X[c].discard(i)
            cols.append(X.pop(j))
        return cols

    def deselect(r, cols):
        for j in reversed(Y[r]):
            X[j] = cols.pop()
            for i in X[j]:
                for c in Y[i]:
                    if c != j:
                        X[c].add(i)

    def solve():
        if not X:
            yield list(sol)
            return
        stats["nodes"] += 1
        if stats["nodes"] > limit:
            raise CapExceeded(f"search exceeded {limit} nodes ({stats})")
        c = min(X, key=lambda c: (len(X[c]), c))
        for r in sorted(X[c]):
            sol.append(r)
            cols = select(r)
            yield from solve()
            deselect(r, cols)
            sol.pop()

    yield from solve()


def _cover_problem(rows, ncols):
    Y = {i: sorted(r) for i, r in enumerate(rows)}
    X = {c: set() for c in range(ncols)}
    for i, r in Y.items():
        for c in r:
            X[c].add(i)
    return X, Y


def lines_and_points(q):
    """2-subspaces of GF(q)^4 (canonical order) as sorted point-index tuples."""
    F = field(q)
    pts = normalized_vectors(q, 4)
    lut = {k: i for i, k in enumerate(linalg.row_keys(pts, q).tolist())}
    L = grassmannian_array(q, 4, 2)
    C = normalized_vectors(q, 2)
    P = linalg.matmul(C[None], L, F)
    keys = linalg.row_keys(P, q)
    return L, [tuple(sorted(lut[k] for k in row)) for row in keys.tolist()], len(pts)


def search_parallelism(q, node_limit=10**6):
    """Deterministic exact-cover search for a 2-parallelism of G_q(4,2)."""
    if q not in (2, 3):
        raise ParameterError("parallelism search is supported for q in {2, 3}")
    L, lines, npts = lines_and_points(q)
    stats = {"nodes": 0, "spreads": 0}
    X, Y = _cover_problem(lines, npts)
    spreads = list(_exact_cover(X, Y, node_limit, stats))
    stats["spreads"] = len(spreads)
    X, Y = _cover_problem(spreads, len(lines))
    sol = next(_exact_cover(X, Y, node_limit, stats), None)
    if sol is None:
        raise ParameterError(f"no parallelism found ({stats})")
    out = []
    for si in sol:
        blocks = []
        for li in sorted(spreads[si]):
            S = Subspace(q, L[li], canonical=True)
            blocks.append(tuple(tuple(int(x) for x in v) for v in S.vectors()[1:]))
        out.append(blocks)
    return Parallelism(q, out)
