"""Reading and writing constant-dimension codes.

Two formats, both listing codewords as ``iv:tableau`` strings (see
:meth:`Subspace.to_text`):

* text: ``#``-prefixed ``key=value`` header lines, then one codeword per
  line, optionally followed by a space and an integer component label;
* JSON: one object with the same header keys plus ``codewords`` and
  ``labels`` arrays.

Parsing is vectorized per identifying vector, so million-codeword files
load in seconds.  docs/FORMATS.md has the full description.
"""

from __future__ import annotations

import json
import os
from collections import defaultdict
from pathlib import Path

import numpy as np

from .codes import ConstantDimensionCode
from .errors import ParameterError
from .rankmetric import gabidulin, lift

FORMAT = "liftmrd-code/1"
HEADER_KEYS = ("q", "n", "k", "claimed_distance", "delta", "provenance", "size")


def cache_dir():
    """Directory for generated files: $LIFTMRD_CACHE or ~/.cache/liftmrd."""
    d = Path(os.environ.get("LIFTMRD_CACHE") or Path.home() / ".cache" / "liftmrd")
    d.mkdir(parents=True, exist_ok=True)
    return d


def _header(C):
    return {"format": FORMAT, "q": C.q, "n": C.n, "k": C.k,
            "claimed_distance": C.claimed_distance, "delta": C.delta,
            "provenance": C.provenance, "size": len(C)}


def codeword_strings(C):
    """``iv:tableau`` string of every codeword, in code order."""
    q, n = C.q, C.n
    G = C.gens
    piv = (G != 0).argmax(axis=2)  # (M, k), RREF pivots
    ivs = np.zeros((len(G), n), dtype=np.uint8)
    ivs[np.arange(len(G))[:, None], piv] = 1
    out = np.empty(len(G), dtype=object)
    iv_keys, inv = np.unique(ivs, axis=0, return_inverse=True)
    inv = inv.ravel()
    sep = "" if q < 10 else " "
    for g, iv in enumerate(iv_keys):
        idx = np.nonzero(inv == g)[0]
        p = np.nonzero(iv)[0]
        prefix = "".join(map(str, iv)) + ":"
        cols = [[j for j in range(pi + 1, n) if not iv[j]] for pi in p]
        if q < 10:
            # fixed-width layout: prefix, then tableau rows joined by ';'
            body = []
            for i, cs in enumerate(cols):
                if i:
                    body.append(np.full((len(idx), 1), ord(";"), np.uint8))
                body.append((G[idx][:, i, cs] + ord("0")).astype(np.uint8))
            head = np.frombuffer(prefix.encode(), np.uint8)[None].repeat(len(idx), 0)
            chars = np.ascontiguousarray(np.concatenate([head] + body, axis=1))
            out[idx] = chars.view(f"S{chars.shape[1]}").ravel().astype(str)
            continue
        parts = [[sep.join(map(str, r)) for r in G[idx][:, i, cs].tolist()]
                 for i, cs in enumerate(cols)]
        for t, j in enumerate(idx):
            out[j] = prefix + ";".join(part[t] for part in parts)
    return out.tolist()


def _parse_codewords(lines, q, n, k):
    G = np.zeros((len(lines), k, n), dtype=np.uint8)
    groups = defaultdict(list)
    for t, s in enumerate(lines):
        iv, _, body = s.partition(":")
        groups[iv].append((t, body))
    for iv, items in groups.items():
        if len(iv) != n or iv.count("1") != k:
            raise ParameterError(f"identifying vector {iv!r} does not fit n={n}, k={k}")
        p = [j for j, ch in enumerate(iv) if ch == "1"]
        free = [[j for j in range(pi + 1, n) if iv[j] == "0"] for pi in p]
        idx = np.array([t for t, _ in items])
        G[idx[:, None], np.arange(k)[None, :], np.array(p)[None, :]] = 1
        if q < 10:
            width = sum(map(len, free)) + k - 1
            bodies = [b for _, b in items]
            if any(len(b) != width for b in bodies):
                raise ParameterError(f"bad tableau width under identifying vector {iv}")
            if width == 0:
                continue
            chars = np.array(bodies, dtype=f"S{width}").view(np.uint8).reshape(len(idx), width)
            pos = 0
            for i, cs in enumerate(free):
                vals = chars[:, pos:pos + len(cs)].astype(np.int64) - ord("0")
                pos += len(cs) + 1
                if (vals >= q).any() or (vals < 0).any():
                    raise ParameterError(f"bad tableau entries under identifying vector {iv}")
                if cs:
                    G[idx[:, None], i, np.array(cs)[None, :]] = vals
            continue
        bodies = [b.split(";") for _, b in items]
        for i, cs in enumerate(free):
            if not cs:
                continue
            vals = np.array([list(map(int, b[i].split())) for b in bodies], dtype=np.int64)
            if vals.shape != (len(idx), len(cs)) or (vals >= q).any() or (vals < 0).any():
                raise ParameterError(f"bad tableau entries under identifying vector {iv}")
            G[idx[:, None], i, np.array(cs)[None, :]] = vals
    return G


def _build(meta, words, labels):
    q, n, k = int(meta["q"]), int(meta["n"]), int(meta["k"])
    G = _parse_codewords(words, q, n, k)
    if meta.get("size") is not None and int(meta["size"]) != len(G):
        raise ParameterError(f"header size {meta['size']} but {len(G)} codewords")
    delta = meta.get("delta")
    delta = None if delta in (None, "None", "") else int(delta)
    cd = meta.get("claimed_distance")
    cd = None if cd in (None, "None", "") else int(cd)
    prov = meta.get("provenance", "explicit")
    C = ConstantDimensionCode(q, n, k, G, claimed_distance=cd, provenance=prov, delta=delta,
                              labels=labels, canonical=True)
    if prov == "lifted-mrd" and delta is not None:
        R = gabidulin(q, k, n - k, delta)
        if len(R) == len(C) and np.array_equal(lift(R.matrices()), C.gens):
            C.rank_code = R
    return C


def dumps_text(C):
    h = _header(C)
    lines = [f"# {key}={h[key]}" for key in ("format",) + HEADER_KEYS]
    words = codeword_strings(C)
    if C.labels is not None:
        lines.append("# labels=1")
        words = [f"{w} {int(lab)}" for w, lab in zip(words, C.labels)]
    return "\n".join(lines + words) + "\n"


def loads_text(text):
    meta, words, labels = {}, [], []
    lines = text.splitlines()
    body = 0
    while body < len(lines) and (not lines[body].strip() or lines[body].startswith("#")):
        key, _, val = lines[body][1:].strip().partition("=")
        if key:
            meta[key.strip()] = val.strip()
        body += 1
    words = [ln.strip() for ln in lines[body:] if ln.strip()]
    if meta.get("labels") == "1":
        split = [w.rsplit(" ", 1) for w in words]
        words = [w for w, _ in split]
        labels = [int(lab) for _, lab in split]
    if meta.get("format") != FORMAT:
        raise ParameterError(f"not a {FORMAT} file")
    return _build(meta, words, labels or None)


def dumps_json(C):
    obj = _header(C)
    obj["codewords"] = codeword_strings(C)
    obj["labels"] = None if C.labels is None else C.labels.tolist()
    return json.dumps(obj)


def loads_json(text):
    obj = json.loads(text)
    if obj.get("format") != FORMAT:
        raise ParameterError(f"not a {FORMAT} document")
    return _build(obj, obj["codewords"], obj.get("labels"))


def save_code(C, path, fmt=None):
    path = Path(path)
    fmt = fmt or ("json" if path.suffix == ".json" else "text")
    path.write_text(dumps_json(C) if fmt == "json" else dumps_text(C))
    return path


def load_code(path):
    text = Path(path).read_text()
    return loads_json(text) if text.lstrip().startswith("{") else loads_text(text)
