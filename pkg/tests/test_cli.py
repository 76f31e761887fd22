import json
import subprocess
import sys

import pytest

from liftmrd.cli import main


@pytest.fixture(autouse=True)
def _cache(tmp_path, monkeypatch):
    monkeypatch.setenv("LIFTMRD_CACHE", str(tmp_path / "cache"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lift_verify_design(tmp_path, capsys):
    path = tmp_path / "c.txt"
    code, out, _ = run(capsys, "lift-mrd", "--q", "2", "--n", "8", "--k", "4", "--delta", "2",
                       "--out", str(path))
    assert code == 0 and "4096" in out
    code, out, _ = run(capsys, "verify", "--code", str(path))
    assert code == 0 and "min distance 4" in out and "pass" in out
    code, out, _ = run(capsys, "verify", "--code", str(path), "--min-distance", "sampled",
                       "--sample", "1000", "--seed", "0x10", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["mode"] == "sampled" and "seed=16" in rep["notes"]
    code, out, _ = run(capsys, "design", "--code", str(path), "--check", "td", "--t", "2",
                       "--lambda", "16")
    assert code == 0 and "pass" in out
    code, out, _ = run(capsys, "design", "--code", str(path), "--check", "td", "--t", "2",
                       "--lambda", "15")
    assert code == 2 and "counterexample" in out
    for check in ("std", "resolvable"):
        assert run(capsys, "design", "--code", str(path), "--check", check)[0] == 0


def test_construct_stdout_and_default_cache(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "--scheme", "I", "--q", "2", "--n", "8", "--out", "-")
    assert code == 0 and "# size=1179" in out
    code, out, _ = run(capsys, "construct", "--scheme", "III", "--q", "2", "--json")
    s = json.loads(out)
    assert code == 0 and s["size"] == 4797 and s["path"].startswith(str(tmp_path / "cache"))


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--q", "2", "--n", "8", "--k", "4", "--delta", "2",
                       "--json")
    row = json.loads(out)
    assert code == 0 and row["johnson"] == 6477 and row["thmB"] == 4797
    code, out, _ = run(capsys, "bounds", "--table", "q-delta")
    assert "Q_2(2) = 0.5776" in out
    assert run(capsys, "bounds", "--q", "2")[0] == 3


def test_lincode_and_alist(capsys):
    code, out, _ = run(capsys, "lincode", "--q", "2", "--n", "4", "--k", "2", "--delta", "1")
    assert code == 0 and out.startswith("[12, 4, 6]")
    code, out, _ = run(capsys, "lincode", "--q", "2", "--n", "4", "--k", "2", "--delta", "1",
                       "--which", "HT")
    assert out.startswith("[16, 8, 4]")
    code, out, _ = run(capsys, "lincode", "--q", "2", "--n", "4", "--k", "2", "--delta", "1",
                       "--emit", "alist")
    assert out.splitlines()[0] == "12 16"
    assert run(capsys, "lincode", "--q", "2")[0] == 3


def test_parallelism(capsys):
    code, out, _ = run(capsys, "parallelism", "--verify-table5")
    assert code == 0 and "spread 6" in out and "1010" in out
    code, out, _ = run(capsys, "parallelism", "--search", "--q", "3")
    assert code == 0 and "13 spreads of 10" in out


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "construct", "--scheme", "IV", "--q", "2")[0] == 3
    assert run(capsys, "lift-mrd", "--q", "2", "--n", "4", "--k", "3", "--delta", "1")[0] == 3
    assert run(capsys, "lift-mrd", "--q", "6", "--n", "4", "--k", "2", "--delta", "1")[0] == 3
    assert run(capsys, "construct", "--scheme", "II", "--q", "2", "--n", "13",
               "--cap", "100")[0] == 4
    path = tmp_path / "c.txt"
    run(capsys, "lift-mrd", "--q", "2", "--n", "6", "--k", "3", "--delta", "2", "--out", str(path))
    assert run(capsys, "verify", "--code", str(path), "--pair-cap", "5")[0] == 4
    single = path.read_text().splitlines()
    text = "\n".join(ln.replace("size=64", "size=1") for ln in single[:9]) + "\n"
    (tmp_path / "one.txt").write_text(text)
    code, out, _ = run(capsys, "verify", "--code", str(tmp_path / "one.txt"))
    assert code == 0 and "infinity" in out


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "liftmrd.cli", "bounds", "--table", "k3-ratio"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "q=3: 0.8738" in r.stdout
