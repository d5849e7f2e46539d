import json
import subprocess
import sys

import pytest

from quotient_closed.cli import main, parse_missing
from quotient_closed.arquiver import PreprojIndex


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_parse_missing():
    assert parse_missing("P1 P2 t^-1P2") == [PreprojIndex(1, 0), PreprojIndex(2, 0),
                                              PreprojIndex(2, 1)]
    assert parse_missing("1:0,2:1") == [PreprojIndex(1, 0), PreprojIndex(2, 1)]
    assert parse_missing('[{"j": 3, "k": 0}]') == [PreprojIndex(3, 0)]
    assert parse_missing("") == []
    with pytest.raises(ValueError):
        parse_missing("Q1")


def test_w2cat_a3(capsys):
    out = run_json(capsys, "w2cat", "--quiver", "A3", "--word", "1 2 3 2")
    assert out["positions"] == [1, 2, 3, 5]
    assert out["labels"] == ["P1", "P2", "P3", "t^-1P2"]
    assert out["missing"] == [{"j": 1, "k": 0}, {"j": 2, "k": 0}, {"j": 3, "k": 0},
                              {"j": 2, "k": 1}]


def test_w2cat_triangle(capsys):
    out = run_json(capsys, "w2cat", "--quiver", "triangle", "--word", "s1s2s3s2s1")
    assert out["length"] == 5
    assert out["positions"] == [1, 2, 3, 5, 7]
    assert out["labels"] == ["P1", "P2", "P3", "t^-1P2", "t^-2P1"]


def test_w2cat_dot(capsys):
    code, out, _ = run(capsys, "w2cat", "--quiver", "A3", "--word", "1 2 3 2", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("fillcolor=gray") == 4
    assert out.count("label=") == 6


def test_cat2w(capsys):
    out = run_json(capsys, "cat2w", "--quiver", "A3", "--missing", "P1 P2 P3 t^-1P2")
    assert out["word"] == [1, 2, 3, 2]
    assert out["reduced"] and out["quotient_closed"] and out["matches_leftmost"]


def test_cat2w_single_p2_is_quotient_closed(capsys):
    # the complement of {P2} is the category attached to s2
    out = run_json(capsys, "cat2w", "--quiver", "A3", "--missing", "P2")
    assert out["word"] == [2]
    assert out["quotient_closed"] is True
    assert out["matches_leftmost"] is True


def test_cat2w_not_closed(capsys):
    out = run_json(capsys, "cat2w", "--quiver", "A2", "--missing", "P1 t^-1P1")
    assert out["quotient_closed"] is False
    assert out["matches_leftmost"] is False


def test_cat2w_triangle(capsys):
    out = run_json(capsys, "cat2w", "--quiver", "triangle", "--missing",
                   "P1 P2 P3 t^-1P2 t^-2P1")
    assert out["word"] == [1, 2, 3, 2, 1]
    assert "quotient_closed" not in out


def test_bad_module_is_usage_error(capsys):
    code, _, err = run(capsys, "cat2w", "--quiver", "A2", "--missing", "t^-1P2")
    assert code == 2
    assert "error" in err


def test_bad_quiver_is_usage_error(capsys):
    code, _, _ = run(capsys, "w2cat", "--quiver", '{"n": 2, "arrows": [[2, 1]]}')
    assert code == 2


def test_non_prime_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "--p", "4"])
    assert exc.value.code == 2


def test_ideal(capsys):
    out = run_json(capsys, "ideal", "--quiver", "A2", "--word", "1")
    assert out["dim_Pi"] == 4 and out["dim_Iw"] == 3
    assert out["C_of_quotient"] == [[1, 0]]
    assert sorted(out["C_of"]) == [[0, 1], [1, 1]]


def test_sorting(capsys):
    out = run_json(capsys, "sorting", "--quiver", "A2", "--word", "2 1")
    assert out == {"w": [2, 1], "c_sortable": False, "sort_c": [2], "torsion": True}
    rows = run_json(capsys, "sorting", "--quiver", "A2")
    assert sum(r["torsion"] for r in rows) == 5
    assert sum(r["c_sortable"] for r in rows) == 5


def test_table(capsys):
    out = run_json(capsys, "table", "--quiver", "A2")
    assert out["rows"] == [{"j": 1, "k": 0, "dim": [1, 0]}, {"j": 2, "k": 0, "dim": [1, 1]},
                           {"j": 1, "k": 1, "dim": [0, 1]}]
    out = run_json(capsys, "table", "--quiver", "triangle", "--kmax", "2")
    assert len(out["rows"]) == 9


def test_verify_suite(capsys):
    out = run_json(capsys, "verify", "--quiver", "A2", "--suite", "all")
    assert out["passed"] is True
    assert {c["suite"] for c in out["checks"]} >= {"bijection", "ideals", "sorting"}


def test_verify_le(capsys):
    out = run_json(capsys, "verify-le", "--n", "4", "--k", "2")
    assert out == {"n": 4, "k": 2, "holds": True, "counterexamples": []}


def test_verify_antimatroid(capsys):
    out = run_json(capsys, "verify-antimatroid", "--quiver", "A3")
    assert out["word"] == [1, 2, 3, 1, 2, 1]
    assert out["accessible"] and out["antimatroid"] and out["supersolvable"]
    assert out["feasible"] == 24


def test_text_format(capsys):
    code, out, _ = run(capsys, "w2cat", "--quiver", "A3", "--word", "1 2", "--format", "text")
    assert code == 0
    assert "positions: [1, 2]" in out


def test_output_is_deterministic(capsys):
    first = run(capsys, "sorting", "--quiver", "A3")
    second = run(capsys, "sorting", "--quiver", "A3")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quotient_closed", "w2cat", "--quiver", "A2",
                           "--word", "2"], capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["labels"] == ["P2"]
