import json

import pytest

from pstrd import star_graph, to_dimacs, to_edgelist
from pstrd.cli import dispatch


@pytest.fixture
def star_file(tmp_path):
    path = tmp_path / "star10.el"
    path.write_text(to_edgelist(star_graph(11)))
    return str(path)


def payload_of(result):
    assert result.exit_code == 0, result.payload
    return result.payload


def test_solve_star_file(star_file):
    payload = payload_of(dispatch(["solve", "--graph", star_file, "--p", "4", "--json"]))
    assert payload["value"] == 4 and payload["optimal"]
    assert sum(payload["witness"]) == 4


def test_solve_named_graph():
    payload = payload_of(dispatch(["solve", "--graph", "robertson", "--p", "3"]))
    assert payload["value"] == 11


def test_solve_dimacs_extension(tmp_path):
    path = tmp_path / "star.col"
    path.write_text(to_dimacs(star_graph(11)))
    payload = payload_of(dispatch(["solve", "--graph", str(path), "--p", "4"]))
    assert payload["value"] == 4


def test_validate_round_trip(star_file, tmp_path):
    solved = payload_of(dispatch(["solve", "--graph", star_file, "--p", "4", "--json"]))
    labels = tmp_path / "witness.lab"
    labels.write_text(" ".join(str(x) for x in solved["witness"]))
    checked = payload_of(dispatch([
        "validate", "--graph", star_file, "--p", "4", "--labels", str(labels)]))
    assert checked["valid"] and checked["weight"] == solved["value"]


def test_validate_reports_violations(star_file, tmp_path):
    labels = tmp_path / "bad.lab"
    labels.write_text("4 " + "0 " * 10)
    payload = payload_of(dispatch([
        "validate", "--graph", star_file, "--p", "3", "--labels", str(labels)]))
    assert not payload["valid"] and payload["weight"] == 4


def test_bounds_command(star_file):
    payload = payload_of(dispatch(["bounds", "--graph", star_file, "--p", "3", "--json"]))
    assert payload["best_lower"] == 5 and payload["best_upper"] == 5
    names = {e["name"] for e in payload["entries"]}
    assert "order_floor" in names and "probabilistic" in names


def test_bounds_with_solver():
    payload = payload_of(dispatch(
        ["bounds", "--graph", "robertson", "--p", "3", "--with-solver"]))
    assert payload["best_lower"] == 7 and payload["best_upper"] == 11
    assert payload["value"] == 11


def test_heuristic_command():
    payload = payload_of(dispatch([
        "heuristic", "--graph", "complete_bipartite(5,5)", "--p", "4",
        "--trials", "50", "--seed", "7", "--json"]))
    assert payload["trials"] == 50 and payload["seed"] == 7
    assert len(payload["weights"]) == 50
    assert payload["best_weight"] == min(payload["weights"])


def test_family_commands():
    payload = payload_of(dispatch(["family", "--name", "kbip", "--params", "2,6", "--p", "3"]))
    assert payload["value"] == 4 and payload["applicable"]
    payload = payload_of(dispatch(["family", "--name", "bistar", "--params", "3,3", "--p", "3"]))
    assert payload["value"] == 4
    payload = payload_of(dispatch(["family", "--name", "universal", "--params", "11", "--p", "4"]))
    assert payload["value"] == 4


def test_reduce_and_x3c_commands(tmp_path):
    x3c = tmp_path / "showcase.x3c"
    x3c.write_text("2 5\n1 2 3\n1 2 4\n1 5 6\n2 3 4\n3 5 6\n")
    out = tmp_path / "gadget.el"
    payload = payload_of(dispatch([
        "reduce", "--x3c", str(x3c), "--p", "3", "--variant", "bipartite",
        "--out", str(out)]))
    assert payload["n"] == 41 and payload["r_threshold"] == 19
    assert out.exists() and out.read_text().startswith("41 ")

    payload = payload_of(dispatch(["x3c-solve", "--x3c", str(x3c)]))
    assert payload["cover"] == [1, 4]


def test_verify_reduction_command(tmp_path):
    x3c = tmp_path / "tiny.x3c"
    x3c.write_text("1 1\n1 2 3\n")
    payload = payload_of(dispatch([
        "verify-reduction", "--x3c", str(x3c), "--p", "3", "--variant", "bipartite"]))
    assert payload["holds"] and payload["value"] == 5


def test_usage_error_exit_2():
    assert dispatch(["solve", "--p", "3"]).exit_code == 2
    assert dispatch(["no-such-command"]).exit_code == 2


def test_computation_error_exit_1(tmp_path):
    result = dispatch(["solve", "--graph", str(tmp_path / "missing.el"), "--p", "3"])
    assert result.exit_code == 1 and "error" in result.payload
    labels = tmp_path / "short.lab"
    labels.write_text("1 1")
    result = dispatch(["validate", "--graph", "star(11)", "--p", "3",
                       "--labels", str(labels)])
    assert result.exit_code == 1


def test_timeout_still_exit_0():
    result = dispatch(["solve", "--graph", "robertson", "--p", "3",
                       "--time-limit", "0.0005"])
    assert result.exit_code == 0
    assert result.payload["optimal"] is False


def test_stable_json_repeatable():
    argv = ["solve", "--graph", "star(11)", "--p", "3", "--json", "--stable"]
    a, b = dispatch(argv), dispatch(argv)
    assert a.render(True) == b.render(True)
    parsed = json.loads(a.render(True))
    assert parsed["elapsed_ms"] == 0


def test_bench_single_criterion():
    result = dispatch(["bench", "--suite", "paper", "--only", "5", "--json"])
    assert result.exit_code == 0
    rows = result.payload["criteria"]
    assert len(rows) == 1 and rows[0]["number"] == 5 and rows[0]["passed"]