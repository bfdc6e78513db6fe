import json
import subprocess
import sys
from importlib import resources

import pytest

from netgames.cli import main
from netgames.diagram_lang import evaluate, parse

TRIANGLE = '{"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}'
EDGE = '{"vertices": 2, "edges": [[0, 1]]}'
DOUBLE = '{"vertices": 2, "edges": [[0, 1], [0, 1]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normalize_edge(capsys):
    code, out, _ = run(capsys, "normalize", "-e", "vertex # vertex ; cup")
    assert code == 0
    g = json.loads(out)
    assert (g["m"], g["n"], g["k"]) == (0, 0, 2)
    assert g["E"]["data"] == [[0, 1], [0, 0]]


def test_normalize_identity(capsys):
    code, out, _ = run(capsys, "normalize", "-e", "id(2)", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1 and payload["command"] == "normalize"
    assert payload["graph"]["B"]["data"] == [[1, 0], [0, 1]]
    assert payload["graph"]["k"] == 0


@pytest.mark.parametrize("src", ["vertex ;", "mult ; mult", "frob", "id(", "cup ) "])
def test_bad_terms_exit_2(capsys, src):
    code, out, err = run(capsys, "normalize", "-e", src)
    assert code == 2 and out == "" and err.startswith("error:")


def test_eq_adjacency_terms(capsys):
    fx = json.loads(resources.files("netgames").joinpath("data/equations.json").read_text())
    fx = fx["fixtures"]
    code, out, _ = run(capsys, "eq", "-e", fx["adjacency_swap"], "-e", fx["adjacency_upper"])
    assert (code, out) == (0, "equal\n")


def test_eq_single_vs_double_edge(capsys):
    code, out, _ = run(capsys, "eq", "--graph", EDGE, "--graph", DOUBLE)
    assert (code, out) == (1, "different\n")


def test_eq_term_against_its_normal_form(capsys, tmp_path):
    term = "vertex # vertex ; comult # id(1) ; id(1) # cup"
    nf = tmp_path / "nf.json"
    nf.write_text(json.dumps(evaluate(parse(term)).to_json()))
    src = tmp_path / "t.diagram"
    src.write_text(term + "\n")
    code, out, _ = run(capsys, "eq", "-f", str(src), "--graph", str(nf))
    assert (code, out) == (0, "equal\n")


def test_eq_type_mismatch(capsys):
    code, _, err = run(capsys, "eq", "-e", "mult", "-e", "comult")
    assert code == 2 and "type mismatch" in err


def test_eq_needs_two_inputs(capsys):
    code, _, err = run(capsys, "eq", "-e", "mult")
    assert code == 2 and "exactly 2" in err


def test_nash_triangle(capsys):
    code, out, err = run(capsys, "nash", "--graph", TRIANGLE, "--game", '{"game": "majority"}')
    assert code == 0 and out == "000\n111\n"
    assert "2 equilibria among 8 profiles" in err


def test_nash_best_shot_edge(capsys):
    code, out, _ = run(capsys, "nash", "--graph", EDGE, "--game", "best_shot")
    assert (code, out) == (0, "01\n10\n")


def test_nash_isolated_vertex(capsys):
    code, out, _ = run(capsys, "nash", "--graph", '{"vertices": 1}')
    assert (code, out) == (0, "0\n1\n")


def test_nash_from_term_and_json(capsys):
    code, out, _ = run(capsys, "nash", "-e", "vertex # vertex ; cup", "--json", "--cap", "2")
    payload = json.loads(out)
    assert code == 0
    assert payload["equilibria"] == [[0, 0], [1, 1]]
    assert payload["profiles_scanned"] == 4 and payload["cap"] == 2


def test_nash_game_from_file(capsys, tmp_path):
    cfg = tmp_path / "game.json"
    cfg.write_text('{"game": "best_shot", "benefit": 1.0, "cost": 0.4}')
    code, out, _ = run(capsys, "nash", "--graph", TRIANGLE, "--game", str(cfg))
    assert (code, out) == (0, "001\n010\n100\n")


def test_nash_open_graph_is_input_error(capsys):
    code, _, err = run(capsys, "nash", "-e", "vertex")
    assert code == 2 and "closed graph" in err


def test_nash_guard_exit_3(capsys):
    code, _, err = run(capsys, "nash", "--graph", '{"vertices": 12}', "--profile-guard", "100")
    assert code == 3 and "guard" in err


def test_perm_bound_exit_3(capsys):
    code, _, _ = run(capsys, "normalize", "-e", "vertex # vertex # vertex", "--perm-bound", "2")
    assert code == 3


def test_bad_json_and_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "nash", "--graph", "{oops")
    assert code == 2 and "invalid JSON" in err
    code, _, err = run(capsys, "normalize", "-f", str(tmp_path / "missing"))
    assert code == 2 and "cannot read" in err


def test_check_axioms(capsys):
    code, out, _ = run(capsys, "check", "axioms")
    lines = out.splitlines()
    assert code == 0
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("passed")


def test_check_axioms_json(capsys):
    code, out, _ = run(capsys, "check", "axioms", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["passed"] and payload["seed"] == 0
    assert {"name", "passed", "detail"} == set(payload["results"][0])


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "netgames", *argv], capture_output=True)


@pytest.mark.parametrize("argv", [
    ("normalize", "-e", "vertex # vertex # vertex ; id(1) # comult # id(1) ; cup # cup"),
    ("eq", "--graph", EDGE, "--graph", DOUBLE, "--json"),
    ("nash", "--graph", TRIANGLE, "--json"),
])
def test_repeated_runs_are_byte_identical(argv):
    first, second = _cli(*argv), _cli(*argv)
    assert first.stdout == second.stdout and first.stdout
    assert first.returncode == second.returncode
