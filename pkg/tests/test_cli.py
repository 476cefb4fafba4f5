import json
import subprocess
import sys
from pathlib import Path

import pytest

from pgwa.cli import main, render, run

GOLDEN = Path(__file__).parent / "golden"

RUN_EXAMPLES = {
    "simple": ["simple", "--a", "(h-1)^2"],
    "limit": ["limit", "--a", "h^2+1", "--pair", "y,x"],
    "endos": ["endos", "--a", "h^2+1"],
}


@pytest.mark.parametrize("name", sorted(RUN_EXAMPLES))
def test_golden_json(name, capsys):
    assert main(RUN_EXAMPLES[name] + ["--format", "json"]) == 0
    out = capsys.readouterr().out
    assert out == (GOLDEN / f"{name}.json").read_text()


def test_golden_values():
    _, rep = run(RUN_EXAMPLES["simple"])
    assert rep["results"][0]["detail"] == {"simple": False, "witness": "h - 1"}
    _, rep = run(RUN_EXAMPLES["limit"])
    assert rep["results"][0]["detail"]["value"] == "-2*h^2"
    _, rep = run(RUN_EXAMPLES["endos"])
    pos, zero, neg, sound = rep["results"]
    assert pos["detail"]["k"] == 2 and pos["detail"]["gammas"] == ["-1", "1"]
    assert zero["detail"]["none_exist"] is True
    assert neg["detail"]["u+v"] == -2
    assert [s["gamma"] for s in neg["detail"]["solutions"]] == ["-1", "1"]
    assert all(s["bc"] == "1" for s in neg["detail"]["solutions"])
    assert sound["status"] == "pass"


def test_json_is_deterministic():
    argv = ["endos", "--a", "(h^2+1)^2", "--conductor", "4"]
    assert render(run(argv)[1], "json") == render(run(argv)[1], "json")


@pytest.mark.parametrize("argv, code", [
    (["simple", "--a", "h+1"], 0),
    (["limit", "--a", "h^2+1", "--pair", "x,h"], 0),
    (["central", "--a", "h^3+h+1"], 0),
    (["bracket", "--a", "h^2+h", "--pair", "y,x"], 0),
    (["jacobi", "--a", "h^-1+h"], 0),
    (["specialize", "--a", "h^2+1", "--lambda", "2"], 0),
    (["specialize", "--a", "h^2+1", "--lambda", "z4"], 0),
    (["verify", "--a", "h^2+h", "--seed", "3"], 0),
    (["check-endo", "--a", "h^2+1", "--kind", "positive", "--gamma", "-1"], 0),
    (["check-endo", "--a", "h^3+h^2+1", "--kind", "positive", "--gamma", "-1"], 1),
    (["check-endo", "--a", "h^2+1", "--kind", "negative", "--gamma", "1", "--b", "2", "--c", "1"], 1),
    (["check-endo", "--a", "(h-1)^2", "--kind", "zero", "--gamma", "1"], 0),
    ([], 2),
    (["nonsense", "--a", "h+1"], 2),
    (["simple"], 2),
    (["simple", "--a", "h^"], 2),
    (["simple", "--a", "h"], 2),
    (["simple", "--a", "0"], 2),
    (["simple", "--a", "h+1", "--conductor", "0"], 2),
    (["simple", "--a", "z5000 h + 1"], 2),
    (["limit", "--a", "h+1"], 2),
    (["limit", "--a", "h+1", "--pair", "x"], 2),
    (["limit", "--a", "h+1", "--pair", "x,q"], 2),
    (["specialize", "--a", "h+1", "--lambda", "0"], 2),
    (["check-endo", "--a", "h+1", "--kind", "positive"], 2),
    (["simple", "--a", "h+1", "--format", "xml"], 2),
])
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code
    out, err = capsys.readouterr()
    if code == 2:
        assert err.startswith("pgwa: error:") and not out
    else:
        assert out and not err


def test_text_output():
    _, rep = run(["simple", "--a", "(h-1)^2"])
    assert render(rep, "text").splitlines() == [
        "simple: a(h) = h^2 - 2*h + 1, conductor 1",
        "[info] simplicity",
        "    simple: False",
        "    witness: h - 1",
    ]


def test_specialize_reports_degenerate_quietly(capsys):
    assert main(["specialize", "--a", "h^2+1", "--lambda", "1", "--format", "json"]) == 0
    out, err = capsys.readouterr()
    assert not err
    assert json.loads(out)["results"][-1]["detail"]["degenerate"] is True


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pgwa", "limit", "--a", "h^2+1", "--pair", "y,x"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "value: -2*h^2" in proc.stdout
