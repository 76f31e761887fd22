import numpy as np
import pytest

from liftmrd.codeio import (cache_dir, codeword_strings, dumps_json, dumps_text, load_code,
                            loads_json, loads_text, save_code)
from liftmrd.constructions import construction_I
from liftmrd.errors import ParameterError
from liftmrd.grassmann import subspace_from_text
from liftmrd.rankmetric import lifted_mrd


def _same(a, b):
    return (np.array_equal(a.gens, b.gens) and (a.q, a.n, a.k) == (b.q, b.n, b.k)
            and a.claimed_distance == b.claimed_distance and a.provenance == b.provenance
            and a.delta == b.delta)


@pytest.mark.parametrize("make", [lambda: lifted_mrd(2, 8, 4, 2), lambda: lifted_mrd(3, 6, 3, 2),
                                  lambda: lifted_mrd(11, 4, 2, 2), lambda: construction_I(2, 8)])
def test_roundtrip_both_formats(make):
    C = make()
    for dump, load in ((dumps_text, loads_text), (dumps_json, loads_json)):
        D = load(dump(C))
        assert _same(C, D)
        if C.labels is not None:
            assert np.array_equal(C.labels, D.labels)


def test_strings_match_subspace_text():
    C = lifted_mrd(3, 5, 2, 1)
    for s, S in zip(codeword_strings(C), C):
        assert s == S.to_text() and subspace_from_text(3, s) == S


def test_rank_code_reattached(tmp_path):
    C = lifted_mrd(2, 6, 3, 2)
    D = load_code(save_code(C, tmp_path / "c.txt"))
    assert D.rank_code is not None and D.delta == 2
    E = load_code(save_code(C, tmp_path / "c.json"))
    assert (tmp_path / "c.json").read_text().startswith("{") and _same(C, E)


def test_bad_inputs():
    C = lifted_mrd(2, 4, 2, 1)
    text = dumps_text(C)
    with pytest.raises(ParameterError):
        loads_text(text.replace("liftmrd-code/1", "other"))
    with pytest.raises(ParameterError):
        loads_text(text.replace("# size=16", "# size=17"))
    bad = text.splitlines()
    bad[-1] = bad[-1][:-1] + "2"
    with pytest.raises(ParameterError):
        loads_text("\n".join(bad))


def test_cache_dir_env(tmp_path, monkeypatch):
    monkeypatch.setenv("LIFTMRD_CACHE", str(tmp_path / "cache"))
    assert cache_dir() == tmp_path / "cache" and cache_dir().is_dir()
