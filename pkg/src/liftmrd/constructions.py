"""Codes that extend a lifted MRD code.

``construction_I`` / ``construction_II`` build (n, M, 4, 3)_q codes by
adding lifted Ferrers-diagram codes on identifying vectors x || y with
wt(x) = 1, wt(y) = 2.  ``construction_III`` builds (8, M, 4, 4)_q codes
from a 2-parallelism of GF(q)^4.

Each builder has a ``*_plan`` twin that lists the components and their
dimensions without enumerating codewords, so sizes are available for
parameters far beyond what can be materialized.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .codes import ConstantDimensionCode
from .errors import CapExceeded, ParameterError, VerificationError
from .ferrers import build_fd_mrd, diagram_from_iv, lift_fd
from .fields import ExtensionField, field
from .grassmann import gaussian
from .parallelism import parallelism_g2_4_2, verify_parallelism
from .rankmetric import DEFAULT_MATERIALIZE_CAP, lifted_mrd, lifted_mrd_size


@dataclass(frozen=True)
class WeightTwoPartition:
    m: int
    classes: tuple  # tuple of tuples of (i, j) position pairs

    def vectors(self, c):
        out = []
        for i, j in self.classes[c]:
            v = [0] * self.m
            v[i] = v[j] = 1
            out.append(tuple(v))
        return out

    def check(self):
        seen = set()
        for cls in self.classes:
            used = [x for e in cls for x in e]
            if len(used) != len(set(used)):
                return False
            seen.update(cls)
        return len(seen) == self.m * (self.m - 1) // 2 == sum(map(len, self.classes))


def one_factorization(m):
    """Round-robin (circle method) partition of the weight-2 vectors of
    length m into classes with disjoint supports.

    For even m, position m-1 is fixed and round r pairs it with r while
    pairing r - t with r + t (mod m-1).  Odd m runs the even schedule on
    m + 1 positions and drops pairs touching the extra position.
    """
    if m < 2:
        raise ParameterError(f"need m >= 2, got {m}")
    N = m if m % 2 == 0 else m + 1
    rounds = []
    for r in range(N - 1):
        pairs = [(r, N - 1)]
        for t in range(1, N // 2):
            pairs.append(((r - t) % (N - 1), (r + t) % (N - 1)))
        pairs = sorted(tuple(sorted(p)) for p in pairs if N - 1 < m or N - 1 not in p)
        rounds.append(tuple(pairs))
    return WeightTwoPartition(m, tuple(rounds))


def _s_value(n):
    return n - 4 if n % 2 else n - 3


@dataclass(frozen=True)
class Component:
    """One identifying vector and the lifted Ferrers-diagram code on it."""

    iv: tuple
    family: str  # "MRD", "A1", "A2", "A3"
    pending: tuple
    dimension: int
    block: int = 1

    @property
    def label(self):
        return "".join(map(str, self.iv))


def _components_for(n, y_offset, part, q, block=1):
    """A_1, A_2, A_3 components for one weight-two partition placed at
    y-coordinates y_offset .. y_offset + part.m - 1."""
    s = len(part.classes)
    out = []
    for ci in range(s):
        if ci == 0:
            x, fam, pend = (0, 0, 1), "A1", ()
        elif ci <= min(q + 1, s) - 1:
            x, fam, pend = (0, 1, 0), "A2", (ci - 1,)
        else:
            j = ci - q - 1
            x, fam, pend = (1, 0, 0), "A3", (j // q, j % q)
        for i, j in part.classes[ci]:
            y = [0] * (n - 3)
            y[y_offset + i] = y[y_offset + j] = 1
            iv = x + tuple(y)
            D = diagram_from_iv(iv)
            out.append(Component(iv, fam, pend, D.below_first_row, block))
    return out


def construction_I_plan(q, n, partition=None):
    if n < 8:
        raise ParameterError(f"Construction I needs n >= 8, got {n}")
    s = _s_value(n)
    if q * q + q + 1 < s:
        raise ParameterError(f"Construction I needs q^2+q+1 >= s (s={s}); use construction_II")
    part = partition or one_factorization(n - 3)
    if part.m != n - 3 or not part.check():
        raise ParameterError("partition must split all weight-2 vectors of length n-3")
    mrd = Component((1, 1, 1) + (0,) * (n - 3), "MRD", (), 2 * (n - 3))
    return [mrd] + _components_for(n, 0, part, q)


def construction_II_plan(q, n):
    if n < 8:
        raise ParameterError(f"Construction II needs n >= 8, got {n}")
    b = q * q + q + 2
    alpha = (n - 3) // b
    if alpha < 1:
        raise ParameterError(f"Construction II needs n - 3 >= q^2+q+2 = {b}; use construction_I")
    part = one_factorization(b)
    comps = [Component((1, 1, 1) + (0,) * (n - 3), "MRD", (), 2 * (n - 3))]
    for i in range(alpha):
        comps += _components_for(n, i * b, part, q, block=i + 1)
    return comps


def plan_size(q, plan):
    return sum(q**c.dimension for c in plan)


def construction_I_size(q, n):
    return lifted_mrd_size(q, n, 3, 2) + gaussian(n - 3, 2, q)


def construction_II_size(q, n):
    b = q * q + q + 2
    alpha = (n - 3) // b
    return q ** (2 * (n - 3)) + sum(gaussian(b, 2, q) * q ** (2 * (n - 3 - b * i))
                                    for i in range(1, alpha + 1))


def _materialize(q, n, plan, provenance, cap):
    total = plan_size(q, plan)
    if total > cap:
        raise CapExceeded(f"code has {total} codewords, cap is {cap}")
    parts, labels = [], []
    for idx, comp in enumerate(plan):
        if comp.family == "MRD":
            G = lifted_mrd(q, n, 3, 2).gens
        else:
            D = diagram_from_iv(comp.iv)
            fd = build_fd_mrd(D, q, pending_values=comp.pending)
            if fd.dimension != comp.dimension:
                raise VerificationError(f"{comp.label}: dimension {fd.dimension} != {comp.dimension}")
            G = lift_fd(comp.iv, fd.codewords())
        parts.append(G)
        labels.append(np.full(len(G), idx, dtype=np.int32))
    return ConstantDimensionCode(q, n, 3, np.concatenate(parts), claimed_distance=4,
                                 provenance=provenance, labels=np.concatenate(labels),
                                 components=plan, canonical=True)


def construction_I(q, n, cap=DEFAULT_MATERIALIZE_CAP, partition=None):
    """(n, q^{2(n-3)} + [n-3, 2]_q, 4, 3)_q code."""
    return _materialize(q, n, construction_I_plan(q, n, partition), "construction-I", cap)


def construction_II(q, n, cap=DEFAULT_MATERIALIZE_CAP):
    """Blockwise variant for n - 3 >= q^2 + q + 2."""
    return _materialize(q, n, construction_II_plan(q, n), "construction-II", cap)


# -- Construction III -----------------------------------------------------------

def _coset_basis(Z):
    """Unit vectors on the non-pivot columns of Z, smallest radix value first."""
    free = [j for j in range(4) if j not in Z.pivots]
    out = []
    for j in sorted(free, reverse=True):
        e = np.zeros(4, dtype=np.uint8)
        e[j] = 1
        out.append(e)
    return out


# coset index of v'_1, v'_2, v'_3 for the four q = 2 codeword families
PATTERNS_Q2 = ((0, 0, 0), (1, 2, 3), (2, 3, 1), (3, 1, 2))


def coset_pattern(q, c, ext=None, literal=True):
    """Coset label (a GF(q^2) int) assigned to a v'_1 + b v'_2, keyed by (a, b).

    Cosets of Z are labelled by GF(q^2) via a w_1 + b w_2 + Z <-> a + b x.
    For q = 2 with ``literal`` the four fixed families of ``PATTERNS_Q2``
    are used; otherwise family c is multiplication by the element c.
    """
    if q == 2 and literal:
        pat = PATTERNS_Q2[c]
        return {(1, 0): pat[0], (0, 1): pat[1], (1, 1): pat[2]}
    ext = ext or ExtensionField(q, 2)
    return {(a, b): ext.mul(c, a + q * b) for b in range(q) for a in range(q) if a or b}


def cross_point_sets(q, Z, Zp, ext=None, literal=True):
    """Vector lists of the q^2 codewords attached to the ordered pair (Z, Z').

    Each list is {(0 || u) : u in Z, u != 0} together with
    {(v' || y) : v' in Z' nonzero, y in the coset assigned to v'}.
    """
    F = field(q)
    w = _coset_basis(Z)
    zvecs = Z.vectors()
    head = [np.concatenate([np.zeros(4, dtype=np.uint8), z]) for z in zvecs[1:]]
    out = []
    for c in range(q * q):
        rows = list(head)
        for (a, b), lab in coset_pattern(q, c, ext, literal).items():
            vp = F.add_t[F.mul_t[a, Zp.gen[0]], F.mul_t[b, Zp.gen[1]]]
            rep = F.add_t[F.mul_t[lab % q, w[0]], F.mul_t[lab // q, w[1]]]
            rows += [np.concatenate([vp, F.add_t[rep, z]]) for z in zvecs]
        out.append(np.array(rows, dtype=np.uint8))
    return out


def _closure_gens(point_sets, q):
    """RREF generator for each point set, checking the set is a subspace."""
    F = field(q)
    S = np.stack(point_sets)
    R, ranks = linalg.rref_batch(S, F)
    bad = np.nonzero(ranks != 4)[0]
    if bad.size:
        raise VerificationError(f"point set {int(bad[0])} spans dimension {int(ranks[bad[0]])}")
    for i, P in enumerate(point_sets):
        keys = linalg.row_keys(P, q)
        if len(np.unique(keys)) != q**4 - 1 or (keys == 0).any():
            raise VerificationError(f"point set {i} is not the nonzero part of a 4-space")
    return R[:, :4]


def construction_III_plan(q):
    return {"mrd": q**12, "cross": gaussian(4, 2, q) * (q * q + 1) * q * q, "v0": 1}


def construction_III_size(q):
    return sum(construction_III_plan(q).values())


def construction_III(q=2, parallelism=None, cap=DEFAULT_MATERIALIZE_CAP):
    """(8, q^12 + [4,2]_q (q^2+1) q^2 + 1, 4, 4)_q code."""
    if parallelism is None:
        if q != 2:
            raise ParameterError("supply a parallelism of G_q(4,2) for q != 2")
        parallelism = parallelism_g2_4_2()
    rep = verify_parallelism(parallelism, q)
    if not rep.ok:
        raise ParameterError(f"invalid parallelism: {rep.counterexample}")
    if construction_III_size(q) > cap:
        raise CapExceeded(f"code has {construction_III_size(q)} codewords, cap is {cap}")
    ext = ExtensionField(q, 2)
    mrd = lifted_mrd(q, 8, 4, 2)
    sets, comps = [], []
    for si, spread in enumerate(parallelism.subspaces()):
        for zi, Z in enumerate(spread):
            for zpi, Zp in enumerate(spread):
                for c, P in enumerate(cross_point_sets(q, Z, Zp, ext)):
                    sets.append(P)
                    comps.append((si, zi, zpi, c))
    cross = _closure_gens(sets, q)
    v0 = np.zeros((1, 4, 8), dtype=np.uint8)
    v0[0, np.arange(4), np.arange(4, 8)] = 1
    gens = np.concatenate([mrd.gens, cross, v0])
    labels = np.concatenate([np.zeros(len(mrd), np.int32), np.ones(len(cross), np.int32), [2]])
    code = ConstantDimensionCode(q, 8, 4, gens, claimed_distance=4, provenance="construction-III",
                                 labels=labels, components=["MRD", "cross", "V0"], canonical=True)
    code.cross_index = comps
    return code
