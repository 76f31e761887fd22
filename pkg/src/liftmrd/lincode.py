"""Binary codes whose parity-check matrices are incidence matrices of
lifted MRD codes.

H has one row per codeword (message order, so parallel classes are
contiguous) and one column per point of V^n in :class:`PointIndex`
order.  C has parity-check H; C^T has parity-check H^T.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from . import linalg
from .designs import block_points, parallel_classes
from .errors import CapExceeded, ParameterError, VerificationError
from .grassmann import PointIndex
from .report import Report

SWEEP_CAP = 1 << 28


@dataclass
class IncidenceMatrix:
    H: np.ndarray
    q: int
    n: int
    k: int
    delta: int

    @property
    def kprime(self):
        return (self.q**self.k - 1) // (self.q - 1)

    @property
    def m(self):
        return self.q ** (self.n - self.k)

    @property
    def r(self):
        """Column weight: codewords through a point."""
        return self.q ** ((self.n - self.k) * (self.k - self.delta))

    @property
    def lam(self):
        return self.q ** ((self.n - self.k) * (self.k - self.delta - 1))


def incidence_matrix(C):
    """Incidence matrix of a lifted MRD code, with its regularity and
    permutation-block structure checked."""
    if C.delta is None or C.rank_code is None:
        raise ParameterError("incidence matrices are built from lifted MRD codes")
    if C.delta >= C.k:
        raise ParameterError("delta = k gives column weight one: C has distance 2 and "
                             "C^T is the zero code, so these codes are not built")
    q, n, k = C.q, C.n, C.k
    idx = PointIndex(q, n, k)
    P = block_points(C.gens, q, idx)
    if (P < 0).any():
        raise ParameterError("not a lifted MRD code: a codeword contains a V0 point")
    H = np.zeros((len(C), idx.num_points), dtype=np.uint8)
    H[np.arange(len(C))[:, None], P] = 1
    inc = IncidenceMatrix(H, q, n, k, C.delta)
    rw, cw = H.sum(axis=1), H.sum(axis=0)
    if (rw != inc.kprime).any() or (cw != inc.r).any():
        raise VerificationError(f"irregular incidence matrix: row weights {set(rw.tolist())}, "
                                f"column weights {set(cw.tolist())}")
    check_permutation_blocks(inc, parallel_classes(C))
    return inc


def check_permutation_blocks(inc, classes):
    m = inc.m
    H = inc.H
    for c in np.unique(classes):
        rows = H[classes == c]
        blk = rows.reshape(len(rows), inc.kprime, m)
        if len(rows) != m or (blk.sum(axis=2) != 1).any() or (blk.sum(axis=0) != 1).any():
            raise VerificationError(f"parallel class {int(c)} is not a row of permutation blocks")


# -- GF(2) dimension and exhaustive distance ---------------------------------

def code_basis(H):
    """Basis of the binary code with parity-check H."""
    return linalg.gf2_kernel(H)


def _popcount_rows(P):
    return np.bitwise_count(P).sum(axis=1, dtype=np.int64)


def exhaustive_min_distance(basis, cap=SWEEP_CAP):
    """Gray-code sweep over all codewords spanned by ``basis`` (rows).

    Low-order combinations are tabulated once; the high-order part walks
    a Gray code, so each step is one XOR plus a popcount of the table.
    Returns (min weight, a minimum-weight word, every weight even).
    """
    basis = np.asarray(basis, dtype=np.uint8)
    dim, N = basis.shape
    if dim == 0:
        return None, None, True
    if 2**dim > cap:
        raise CapExceeded(f"2^{dim} codewords exceed the sweep cap {cap}")
    P = linalg.gf2_pack(basis)
    lo = min(dim, 16)
    T = np.zeros((1, P.shape[1]), dtype=np.uint64)
    for b in P[:lo]:
        T = np.concatenate([T, T ^ b])
    high = P[lo:]
    best, word, even = None, None, True
    cur = np.zeros(P.shape[1], dtype=np.uint64)
    for g in range(1 << len(high)):
        w = _popcount_rows(T ^ cur)
        if g == 0:
            w[0] = np.iinfo(np.int64).max
        even = even and not (w[w != np.iinfo(np.int64).max] & 1).any()
        i = int(w.argmin())
        if best is None or w[i] < best:
            best, word = int(w[i]), (T[i] ^ cur)
        if g + 1 < 1 << len(high):
            cur = cur ^ high[((g + 1) & -(g + 1)).bit_length() - 1]
    return best, linalg.gf2_unpack(word[None], N)[0], even


def sampled_upper_bound(basis, samples, seed=0):
    """Least weight among random nonzero combinations of the basis."""
    basis = np.asarray(basis, dtype=np.uint8)
    if len(basis) == 0:
        return None
    rng = np.random.default_rng(seed)
    P = linalg.gf2_pack(basis)
    best = None
    for s in range(0, samples, 4096):
        coef = rng.integers(0, 2, size=(min(4096, samples - s), len(basis)), dtype=np.uint8)
        coef = coef[coef.any(axis=1)]
        words = np.zeros((len(coef), P.shape[1]), dtype=np.uint64)
        for j in range(len(basis)):
            words[coef[:, j] == 1] ^= P[j]
        if len(words):
            w = int(_popcount_rows(words).min())
            best = w if best is None else min(best, w)
    return best


# -- bounds -----------------------------------------------------------------

def tanner_bounds(n_cols, gamma, rho, mu2):
    """(T1, T2) for a parity-check matrix with n_cols columns, column
    weight gamma, row weight rho and second eigenvalue mu2 of H^T H."""
    den = gamma * rho - mu2
    t1 = Fraction(n_cols * (2 * gamma - mu2), den)
    t2 = Fraction(2 * n_cols * (2 * gamma + rho - 2 - mu2), rho * den)
    return t1, t2


def closed_form_bounds(q, n, k, delta):
    """Lower bounds on d and d^T in closed form, plus the common upper bound."""
    d = Fraction(q ** (n - k) * (q**k - 1), q**k - q)
    if delta == k - 1 and q == 2 and k == n - k:
        dT = Fraction(2**k)
    else:
        dT = Fraction(4) * Fraction(q) ** ((n - k) * (delta - k + 1))
    intersect = Fraction(q**k - 1, q ** (k - delta) - 1) + 1
    return {"d": d, "dT": dT, "dT_intersection": intersect, "upper": 2 * q ** (n - k)}


@dataclass
class LinearCodeSummary:
    which: str
    length: int
    dimension: int
    min_distance: int | None
    interval: tuple
    even_weight: bool | None
    tanner: tuple
    witness: list | None = dc_field(default=None, repr=False)

    def as_dict(self):
        out = asdict(self)
        out["tanner"] = [str(x) for x in self.tanner]
        out["interval"] = list(self.interval)
        return out


def _analyze(inc, which, cap, samples, seed):
    H = inc.H if which == "C" else inc.H.T
    N = H.shape[1]
    rank = linalg.gf2_rank(H)
    basis = code_basis(H)
    if which == "C":
        tb = tanner_bounds(N, inc.r, inc.kprime, inc.r)
        intersect = Fraction(0)
    else:
        tb = tanner_bounds(N, inc.kprime, inc.r, inc.r)
        intersect = Fraction(inc.q**inc.k - 1, inc.q ** (inc.k - inc.delta) - 1) + 1
    lower = math.ceil(max(tb + (intersect,)))
    upper = 2 * inc.m
    even = bool(not (basis.sum(axis=1) & 1).any())  # a basis of even words spans even words
    if 2 ** len(basis) <= cap:
        d, word, even_sweep = exhaustive_min_distance(basis, cap)
        if even_sweep != even:
            raise VerificationError("sweep parity disagrees with basis parity")
        return LinearCodeSummary(which, N, N - rank, d, (d, d), even, tb,
                                 None if word is None else word.tolist())
    ub = sampled_upper_bound(basis, samples, seed)
    return LinearCodeSummary(which, N, N - rank, None, (lower, min(upper, ub or upper)), even, tb)


def analyze_C(inc, cap=SWEEP_CAP, samples=1 << 16, seed=0):
    return _analyze(inc, "C", cap, samples, seed)


def analyze_CT(inc, cap=SWEEP_CAP, samples=1 << 16, seed=0):
    return _analyze(inc, "CT", cap, samples, seed)


# -- spectrum -----------------------------------------------------------------

def spectrum_certificate(inc):
    """Exact check that H^T H has eigenvalues r k', r, 0 with
    multiplicities 1, k'(m-1), k'-1, using no eigen-solver.

    M (M - r I)(M - r k' I) = 0 shows the spectrum lies in {0, r, r k'};
    tr M and tr M^2 then fix the multiplicities.
    """
    H = inc.H.astype(np.int64)
    M = H.T @ H
    N = len(M)
    r, kp = inc.r, inc.kprime
    big = N * N * int(M.max()) * (r * kp) ** 2 >= 1 << 62
    Mx = M.astype(object) if big else M
    eye = np.eye(N, dtype=Mx.dtype)
    Z = Mx @ (Mx - r * eye) @ (Mx - r * kp * eye)
    params = {"r": r, "kprime": kp, "size": N}
    if (Z != 0).any():
        i, j = map(int, np.argwhere(Z != 0)[0])
        return Report("fail", params, {"kind": "annihilator", "entry": [i, j]})
    t1 = int(np.trace(Mx))
    t2 = int((Mx * Mx.T).sum())  # trace of M^2 for symmetric M
    # a (r k') + b r = t1,  a (r k')^2 + b r^2 = t2
    det = r * kp * r * r - r * (r * kp) ** 2
    a = Fraction(t1 * r * r - r * t2, det)
    b = Fraction(r * kp * t2 - (r * kp) ** 2 * t1, det)
    c = N - a - b
    mult = {r * kp: a, r: b, 0: c}
    expected = {r * kp: 1, r: kp * (inc.m - 1), 0: kp - 1}
    details = {"eigenvalues": [r * kp, r, 0], "multiplicities": [str(a), str(b), str(c)],
               "trace": t1, "trace_sq": t2}
    if mult != expected:
        return Report("fail", params, {"kind": "multiplicity", "found": details["multiplicities"],
                                       "expected": list(expected.values())}, details)
    return Report("pass", params, details=details)


def dimension_bound_checks(inc, dimC=None, dimCT=None):
    """Check dim(C), dim(C^T) against the eigenvalue-based bounds."""
    q, kp, m = inc.q, inc.kprime, inc.m
    rows, cols = inc.H.shape
    if dimC is None or dimCT is None:
        rank = linalg.gf2_rank(inc.H)
        dimC, dimCT = cols - rank, rows - rank
    lo_C, lo_CT = kp - 1, rows - kp * (m - 1) - 1
    if q % 2:
        extra = 0 if kp % 2 else 1
        hi_C, hi_CT = kp - 1 + extra, rows - kp * (m - 1) - 1 + extra
    else:
        hi_C, hi_CT = m * (kp - 1), rows - m
    checks = {"dimC": [lo_C, dimC, hi_C], "dimCT": [lo_CT, dimCT, hi_CT]}
    bad = [name for name, (lo, v, hi) in checks.items() if not lo <= v <= hi]
    return Report("fail" if bad else "pass", {"q": q, "n": inc.n, "k": inc.k, "delta": inc.delta},
                  {"violated": bad} if bad else None, checks)


# -- alist --------------------------------------------------------------------

def emit_alist(H):
    """MacKay alist text for a 0/1 matrix (columns are the code bits)."""
    H = np.asarray(H, dtype=np.uint8)
    M, N = H.shape
    cols = [np.nonzero(H[:, j])[0] + 1 for j in range(N)]
    rows = [np.nonzero(H[i])[0] + 1 for i in range(M)]
    cmax = max((len(c) for c in cols), default=0)
    rmax = max((len(r) for r in rows), default=0)

    def pad(v, w):
        return " ".join(map(str, list(v) + [0] * (w - len(v))))

    lines = [f"{N} {M}", f"{cmax} {rmax}",
             " ".join(str(len(c)) for c in cols), " ".join(str(len(r)) for r in rows)]
    lines += [pad(c, cmax) for c in cols]
    lines += [pad(r, rmax) for r in rows]
    return "\n".join(lines) + "\n"


def parse_alist(text):
    tok = [list(map(int, ln.split())) for ln in text.strip().splitlines()]
    N, M = tok[0]
    H = np.zeros((M, N), dtype=np.uint8)
    for j, line in enumerate(tok[4:4 + N]):
        for i in line:
            if i:
                H[i - 1, j] = 1
    for i, line in enumerate(tok[4 + N:4 + N + M]):
        if sorted(x - 1 for x in line if x) != np.nonzero(H[i])[0].tolist():
            raise ParameterError(f"alist row {i + 1} disagrees with the column lists")
    return H
