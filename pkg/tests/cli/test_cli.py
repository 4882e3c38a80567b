import csv
import io
import json

import pytest

from app.main import run_cli
from tests.factories import (
    EXAMPLE_LS, SEVEN_OBJECT_DIGRAPH_CSV, SEVEN_OBJECT_EDGES, SEVEN_OBJECT_ROUNDS_CSV,
    TWO_COMPONENTS_CSV
)

LABELS = [f"X{k}" for k in range(1, 8)]


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def stdin_bytes(data):
    return io.TextIOWrapper(io.BytesIO(data), encoding="utf-8")


def test_solve_least_squares(capsys, write_csv):
    code, out, _ = run(capsys, "solve", "--method", "ls", write_csv(SEVEN_OBJECT_ROUNDS_CSV))
    assert code == 0
    document = json.loads(out)
    assert [document["ratings"][label] for label in LABELS] == pytest.approx(EXAMPLE_LS, abs=1e-3)
    assert document["ranking"]["order"] == "X1 > X3 > X2 > X5 > X4 > X7 > X6"
    assert document["diagnostics"]["is_connected"]


def test_solve_score_and_grs(capsys, write_csv):
    path = write_csv(SEVEN_OBJECT_ROUNDS_CSV)
    code, out, _ = run(capsys, "solve", "--method", "score", "--tie-tol", "0", path)
    assert code == 0
    assert json.loads(out)["ranking"]["order"] == "X1 = X5 = X2 > X3 = X7 = X4 > X6"

    code, out, _ = run(capsys, "solve", "--method", "grs", "--epsilon", "1e6", path)
    assert code == 0
    document = json.loads(out)
    assert document["method"] == "grs"
    assert document["parameters"] == {"epsilon": 1e6, "rounds": 1}
    assert isinstance(document["parameters"]["rounds"], int)
    assert document["ranking"]["order"] == "X1 > X3 > X2 > X5 > X4 > X7 > X6"


def test_solve_reads_standard_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", stdin_bytes(SEVEN_OBJECT_ROUNDS_CSV.encode()))
    code, out, _ = run(capsys, "solve")
    assert code == 0
    assert json.loads(out)["method"] == "least-squares-direct"


def test_invalid_utf8_on_standard_input_exit_2(capsys, monkeypatch):
    data = b"round,object_i,object_j,result\n1,\xff,B,1\n"
    monkeypatch.setattr("sys.stdin", stdin_bytes(data))
    code, out, err = run(capsys, "solve")
    assert code == 2
    assert out == ""
    assert "standard input is not UTF-8 text" in err


def test_grs_rounds_default_to_the_largest_match_count(capsys, write_csv):
    # every match in its own round: seven round labels, one match per pair
    text = "round,object_i,object_j,result\n" + "".join(
        f"r{k},X{winner},X{loser},1\n" for k, (winner, loser) in enumerate(SEVEN_OBJECT_EDGES)
    )
    path = write_csv(text)
    code, out, _ = run(capsys, "grs", "--epsilon", "0.1", path)
    assert code == 0
    assert json.loads(out)["parameters"] == {"epsilon": 0.1, "rounds": 1}

    code, out, _ = run(capsys, "solve", "--method", "grs", "--epsilon", "0.1", path)
    assert json.loads(out)["parameters"]["rounds"] == 1

    code, out, _ = run(capsys, "compare", "--epsilon", "0.1", path)
    columns = {column["method"]: column for column in json.loads(out)["columns"]}
    assert columns["grs"]["parameters"]["rounds"] == 1

    code, out, _ = run(capsys, "grs", "--epsilon", "0.1", "--rounds", "7", path)
    assert json.loads(out)["parameters"]["rounds"] == 7


def test_iterate_with_trace(capsys, write_csv, tmp_path):
    trace_path = tmp_path / "trace.csv"
    code, out, _ = run(capsys, "iterate", "--trace", str(trace_path), write_csv(SEVEN_OBJECT_ROUNDS_CSV))
    assert code == 0
    document = json.loads(out)
    assert document["method"] == "least-squares-iterative"
    assert document["trace"]["ranking_stable_at"] == 13
    assert document["trace"]["trace_file"] == str(trace_path)
    assert [document["ratings"][label] for label in LABELS] == pytest.approx(EXAMPLE_LS, abs=1e-3)

    rows = list(csv.DictReader(io.StringIO(trace_path.read_text())))
    assert len(rows) == document["trace"]["steps"] + 1
    first = [float(rows[1][label]) for label in LABELS]
    assert first == pytest.approx([5 / 9, 5 / 9, 2 / 9, -2 / 9, 0, -8 / 9, -2 / 9], abs=1e-12)
    assert float(rows[3]["X1"]) == pytest.approx(76 / 81, abs=1e-12)


def test_iterate_regular_bipartite(capsys, write_csv):
    k22 = "object_i,object_j,a_ij,m_ij\nA,C,1,1\nA,D,1,1\nB,C,1,1\nB,D,-1,1\n"
    path = write_csv(k22)
    code, _, err = run(capsys, "iterate", path)
    assert code == 3
    assert "regular bipartite" in err

    code, out, _ = run(capsys, "iterate", "--fallback-direct", path)
    assert code == 0
    document = json.loads(out)
    assert document["method"] == "least-squares-direct"
    assert document["parameters"] == {"fallback": 1}
    assert document["trace"] is None


def test_iterate_step_cap_exits_3_and_keeps_the_trace(capsys, write_csv, tmp_path):
    trace_path = tmp_path / "partial.csv"
    code, _, err = run(capsys, "iterate", "--max-iter", "4", "--trace", str(trace_path),
                       write_csv(SEVEN_OBJECT_ROUNDS_CSV))
    assert code == 3
    assert "did not reach" in err
    assert len(trace_path.read_text().splitlines()) == 6


def test_diagnose(capsys, write_csv):
    code, out, _ = run(capsys, "diagnose", write_csv(SEVEN_OBJECT_ROUNDS_CSV))
    assert code == 0
    diagnostics = json.loads(out)["diagnostics"]
    assert [diagnostics["loops"][label] for label in LABELS] == [2, 2, 1, 1, 0, 0, 1]
    assert diagnostics["max_degree"] == 3
    assert diagnostics["is_connected"]
    assert diagnostics["bipartition"] is None
    assert diagnostics["mu1_estimate"] < diagnostics["mu1_bound"] == 6
    assert not diagnostics["mu1_at_bound"]


def test_diagnose_regular_bipartite_at_the_bound(capsys, write_csv):
    k22 = "object_i,object_j,a_ij,m_ij\nA,C,1,1\nA,D,1,1\nB,C,1,1\nB,D,-1,1\n"
    code, out, _ = run(capsys, "diagnose", write_csv(k22))
    assert code == 0
    diagnostics = json.loads(out)["diagnostics"]
    assert diagnostics["is_regular_bipartite"]
    assert diagnostics["mu1_estimate"] == diagnostics["mu1_bound"] == 4
    assert diagnostics["mu1_at_bound"]


def test_grs_series(capsys, write_csv):
    path = write_csv(SEVEN_OBJECT_ROUNDS_CSV)
    code, out, _ = run(capsys, "grs", "--series", "--epsilon", "0.05", "--k-max", "400", path)
    assert code == 0
    series = json.loads(out)
    code, out, _ = run(capsys, "grs", "--epsilon", "0.05", path)
    direct = json.loads(out)
    assert series["method"] == "grs-series"
    for label in LABELS:
        assert series["ratings"][label] == pytest.approx(direct["ratings"][label], abs=1e-9)

    code, _, err = run(capsys, "grs", "--series", "--epsilon", "10", path)
    assert code == 2
    assert "series diverges" in err


def test_positional_power(capsys, write_csv):
    code, out, _ = run(capsys, "positional-power", write_csv("source,target\nA,B\nB,C\nC,A\n"))
    assert code == 0
    document = json.loads(out)
    assert document["ratings"] == pytest.approx({"A": 1.5, "B": 1.5, "C": 1.5}, abs=1e-9)
    assert document["ranking"]["order"] == "A = B = C"


def test_convert_digraph(capsys, write_csv):
    code, out, _ = run(capsys, "convert-digraph", write_csv("source,target\nA,B\nB,A\nB,C\n"))
    assert code == 0
    assert out == "object_i,object_j,a_ij,m_ij\nA,B,0.0,1.0\nB,C,1.0,1.0\n"

    code, out, _ = run(capsys, "convert-digraph", "--two-matches",
                       write_csv("source,target\nA,B\nB,A\n"))
    assert out == "object_i,object_j,a_ij,m_ij\nA,B,0.0,2.0\n"


def test_compare(capsys, write_csv):
    code, out, _ = run(capsys, "compare", write_csv(SEVEN_OBJECT_DIGRAPH_CSV))
    assert code == 0
    columns = {column["method"]: column for column in json.loads(out)["columns"]}
    assert columns["least-squares-direct"]["ranking"] == "X1 > X3 > X2 > X5 > X4 > X7 > X6"
    assert columns["positional-power"]["error"] is None

    code, out, _ = run(capsys, "compare", "--table", write_csv(TWO_COMPONENTS_CSV))
    assert code == 0
    assert "least-squares-direct: error: comparison graph is disconnected" in out


def test_two_components_exit_3(capsys, write_csv):
    code, out, err = run(capsys, "solve", "--method", "ls", write_csv(TWO_COMPONENTS_CSV))
    assert code == 3
    assert out == ""
    assert "{A, B}; {C, D}" in err


def test_malformed_input_exit_2(capsys, write_csv):
    code, _, err = run(capsys, "solve", write_csv("round,object_i,object_j,result\n1,A,B,2\n"))
    assert code == 2
    assert err.startswith("error: line 2:")


@pytest.mark.parametrize("argv", [
    ["solve", "--unknown-flag"],
    ["solve", "--method", "elo"],
    ["no-such-command"],
    [],
])
def test_bad_arguments_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_conflicting_format_exit_2(capsys, write_csv):
    code, _, err = run(capsys, "solve", "--format", "digraph", write_csv(SEVEN_OBJECT_ROUNDS_CSV))
    assert code == 2
    assert "--format digraph" in err


def test_missing_file_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "diagnose", str(tmp_path / "absent.csv"))
    assert code == 2
    assert "cannot read" in err


def test_output_is_deterministic(capsys, write_csv):
    path = write_csv(SEVEN_OBJECT_ROUNDS_CSV)
    _, first, _ = run(capsys, "iterate", path)
    _, second, _ = run(capsys, "iterate", path)
    assert first == second
