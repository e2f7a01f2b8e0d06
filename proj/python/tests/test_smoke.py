import os
from fractions import Fraction
from pathlib import Path

import pytest

import gonil

FIX = Path(os.environ.get("GONIL_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def test_heisenberg_so2_alpha():
    sp = gonil.load(FIX / "heisenberg_so2.json")
    assert (sp.dim, sp.m_dim, sp.h_dim) == (4, 3, 1)
    sol = gonil.solve_alpha(sp, [1, 0, 2, 0])
    assert sol["k"] == "0"
    assert sol["alpha"] == ["0", "0", "0", "-2"]


def test_trivial_isotropy_counterexample():
    v = gonil.go_check(gonil.load(FIX / "heisenberg_trivialH.json"))
    assert v["status"] == "COUNTEREXAMPLE"
    assert v["counterexample"] == ["1", "0", "1"]


def test_cli_exit_codes():
    code, report, _ = gonil.run("go-check", FIX / "heisenberg_so2.json", "--samples", 20, "--seed", 7)
    assert code == 0 and report["body"]["status"] == "SAMPLED_PASS"
    code, _, err = gonil.run("go-check", FIX / "missing.json")
    assert code == 2 and "cannot open" in err
    code, _, _ = gonil.run("no-such-command")
    assert code == 2


def test_skew_and_signature():
    b = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    g = [[0, 0, -1], [0, 1, 0], [-1, 0, 0]]
    assert gonil.check_skew(b, g)
    assert gonil.classify(b, g)["kind"] == "NonSemisimple"
    assert gonil.signature(g) == (2, 1, 0)
    assert gonil.signature([[Fraction(1, 2), 0], [0, 0]]) == (1, 0, 1)


def test_floats_rejected():
    with pytest.raises(TypeError):
        gonil.signature([[0.5]])
    with pytest.raises(ValueError, match="floats forbidden"):
        gonil.Space.from_json('{"algebra": {"dim": 1}, "m_span": [["1"]], "gram_m": [["0.5"]]}')


def test_round_trip():
    sp = gonil.load(FIX / "filiform_L5_null.json")
    again = gonil.Space.from_json(sp.to_json())
    assert again.to_json() == sp.to_json()
