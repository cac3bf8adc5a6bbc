import json
from pathlib import Path

import pytest

from tpcalc.cli import main

CORPUS = Path(__file__).resolve().parents[1] / "corpus"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_probabilistic_coin(capsys):
    code, out, _ = run(capsys, "eval", CORPUS / "proba_coin.tpc", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["semiring"] == "qnn"
    assert [r[0] for r in data["entries"]] == ["2/3", "1/3", "1"]


def test_eval_hadamard_twice(capsys):
    code, out, _ = run(capsys, "eval", CORPUS / "hadamard_plus.tpc", "--format", "json")
    assert code == 0
    assert [r[0] for r in json.loads(out)["entries"]] == ["1", "0", "1"]


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "[(1+1),(1+1)]")
    assert code == 0
    lines = out.split()
    assert lines[0] == "8" and lines[1] == "{1=L,2=L}" and len(lines) == 9


def test_equiv_exit_codes(capsys):
    code, out, _ = run(capsys, "equiv", CORPUS / "switch_dup.tpc", CORPUS / "switch_single.tpc")
    assert code == 0 and out.strip() == "equivalent"
    code, out, _ = run(capsys, "equiv", CORPUS / "or_strict.tpc", CORPUS / "or_lazy.tpc",
                       "--format", "json")
    assert code == 1
    data = json.loads(out)
    assert not data["equivalent"] and data["left"] != data["right"]
    code, _, err = run(capsys, "equiv", CORPUS / "or_strict.tpc", CORPUS / "or_lazy.tpc",
                       "--semiring", "f64")
    assert code == 2 and "decidable" in err


def test_user_errors(capsys, tmp_path):
    bad = tmp_path / "bad.tpc"
    bad.write_text("id<1> ; frob<1>")
    code, _, err = run(capsys, "eval", bad)
    assert code == 2 and "line 1" in err
    assert run(capsys, "eval", tmp_path / "missing.tpc")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_synth_then_equiv(capsys, tmp_path):
    code, out, _ = run(capsys, "synth", CORPUS / "identity_2x2.json", "--dom", "[(1+1)]",
                       "--cod", "[(1+1)]")
    assert code == 0
    made = tmp_path / "made.tpc"
    made.write_text(out)
    assert run(capsys, "equiv", made, CORPUS / "bit_identity.tpc")[0] == 0


def test_normalize_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "normalize", CORPUS / "or_parallel.tpc")
    assert code == 0
    nf = tmp_path / "nf.tpc"
    nf.write_text(out)
    assert run(capsys, "equiv", nf, CORPUS / "or_parallel.tpc")[0] == 0


def test_render(capsys):
    code, out, _ = run(capsys, "render", CORPUS / "coin.tpc")
    assert code == 0 and out.startswith("digraph")


@pytest.mark.parametrize("via_env", [False, True])
def test_axioms_seed(capsys, monkeypatch, via_env):
    args = ["axioms", "--iters", "1", "--semirings", "nat", "--format", "json"]
    if via_env:
        monkeypatch.setenv("TPCALC_SEED", "9")
    else:
        args += ["--seed", "9"]
    code, out, _ = run(capsys, *args)
    assert code == 0
    data = json.loads(out)
    assert data["seed"] == 9 and data["failures"] == 0
    assert all(c["distinct"] for c in data["negative_controls"])
