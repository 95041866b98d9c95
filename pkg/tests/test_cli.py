from __future__ import annotations

import json

import pytest

from gtdegen.cli import EXIT_FAILED, EXIT_GUARD, EXIT_INPUT, EXIT_OK, join_negative_values, run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_polytope_example(capsys):
    code, out = call(capsys, "polytope", "--n", "3", "--lambda", "1,1", "--kind", "pi")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["count"] == 8 and len(data["points"]) == 8


def test_ideal_example(capsys):
    code, out = call(capsys, "ideal", "--n", "3", "--lambda", "1,1", "--A", "-1,-1,-1",
                     "--initial", "--format", "text")
    assert code == EXIT_OK
    assert out.splitlines()[1:] == ["X_1X_23 - X_2X_13"]


def test_cone_boundary(capsys):
    code, out = call(capsys, "cone", "--n", "3", "--A", "0,0,0")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["member"] and data["tight_a"] == [1]
    (cert,) = data["certificates"]
    assert cert["not_in_initial_ideal"] and cert["in_toric_ideal"]


@pytest.mark.parametrize("argv", [
    ["basis", "--lambda", "1,1,1"],
    ["filtration", "--lambda", "1,1", "--A", "-1,-1,-1"],
    ["orbit", "--lambda", "1,1", "--A", "-1,-1,-1", "--seed", "3"],
    ["cartan", "--lambda", "1,0", "--mu", "0,1", "--A", "-1,-1,-1"],
    ["essential", "--lambda", "1,1"],
    ["dual", "--lambda", "1,0,1", "--A", "0,0,0,0,0,0"],
    ["verify-all", "--only", "1,7"],
])
def test_checks_pass(capsys, argv):
    assert call(capsys, *argv)[0] == EXIT_OK


def test_malformed_input(capsys):
    assert run(["polytope", "--lambda", "1,x"]) == EXIT_INPUT
    assert run(["polytope", "--n", "4", "--lambda", "1,1"]) == EXIT_INPUT
    assert run(["filtration", "--lambda", "1,1", "--A", "0,-5,0"]) == EXIT_INPUT
    assert run(["ideal", "--lambda", "1,1", "--initial"]) == EXIT_INPUT
    assert run(["nonsense"]) == EXIT_INPUT
    capsys.readouterr()


def test_guard_breach(capsys):
    assert run(["basis", "--lambda", "2,2,2", "--max-dim", "10"]) == EXIT_GUARD
    capsys.readouterr()


def test_guard_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("GTDEGEN_MAX_DIM", "5")
    assert run(["ideal", "--lambda", "1,1,1"]) == EXIT_GUARD
    capsys.readouterr()


def test_failed_check_exit_code(capsys, monkeypatch):
    import gtdegen.verify as verify
    monkeypatch.setitem(verify.CRITERIA, 1, lambda: (False, {"seconds": 0}))
    assert run(["verify-all", "--only", "1"]) == EXIT_FAILED
    capsys.readouterr()


def test_deterministic_output(capsys, tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"o{k}.json"
        assert run(["orbit", "--lambda", "2,1", "--A", "-1,-1,-1", "--seed", "7",
                    "--output", str(path)]) == EXIT_OK
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_negative_values_are_joined():
    assert join_negative_values(["--A", "-1,0", "--seed", "2"]) == ["--A=-1,0", "--seed", "2"]
