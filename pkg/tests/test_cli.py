import json

import pytest

from taftgreen.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, cmd_decompose, CommandConfig, main
import taftgreen.cli as cli


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decompose_both_engines(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "4", "--left", "2,0", "--right", "4,1", "--engine", "both")
    assert code == EXIT_OK
    assert "formula: M(4,0) + M(4,1)" in out
    assert "oracle:  M(4,0) + M(4,1)" in out
    assert "verdict: match" in out


def test_decompose_n3(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "3", "--left", "2,0", "--right", "2,0")
    assert code == EXIT_OK
    assert "M(1,2) + M(3,0)" in out


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "2", "--left", "2,0", "--right", "2,0",
                       "--engine", "both", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    expected = {"n": 2, "summands": [{"l": 2, "r": 0, "mult": 1}, {"l": 2, "r": 1, "mult": 1}]}
    assert data["formula"] == expected
    assert data["oracle"] == expected
    assert data["match"] is True


def test_mismatch_exit_code(capsys, monkeypatch):
    from taftgreen.green import GreenElement

    monkeypatch.setattr(cli, "basis_product", lambda n, a, b: GreenElement.basis(n, 1, 0))
    code = cmd_decompose(CommandConfig(n=3, command="decompose"), "2,0", "2,0", "both")
    out = capsys.readouterr().out
    assert code == EXIT_MISMATCH
    assert "MISMATCH" in out and "diff" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["decompose", "--n", "3", "--left", "2", "--right", "1,0"],
        ["decompose", "--n", "3", "--left", "5,0", "--right", "1,0"],
        ["decompose", "--n", "3", "--left", "a,b", "--right", "1,0"],
    ],
)
def test_malformed_labels(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert "error" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["presentation"],
        ["presentation", "--n", "1"],
        ["verify", "--n", "3", "--suite", "nope"],
        ["enumerate", "--n", "3", "--format", "xml"],
    ],
)
def test_argparse_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == EXIT_USAGE


def test_presentation_n6(capsys):
    code, out, _ = run(capsys, "presentation", "--n", "6")
    assert code == EXIT_OK
    assert "y^6-1" in out
    assert "(z-y-1)(z^5-4yz^3+3y^2z)" in out


def test_presentation_json(capsys):
    code, out, _ = run(capsys, "presentation", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert data["relations"][0] == [
        {"y": 0, "z": 0, "coeff": "-1"},
        {"y": 2, "z": 0, "coeff": "1"},
    ]
    # (z - y - 1) z = z^2 - yz - z
    assert data["relations"][1] == [
        {"y": 0, "z": 1, "coeff": "-1"},
        {"y": 1, "z": 1, "coeff": "-1"},
        {"y": 0, "z": 2, "coeff": "1"},
    ]


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--format", "json", "--with-reps")
    data = json.loads(out)
    assert [(m["l"], m["r"]) for m in data["modules"]] == [(1, 0), (1, 1), (2, 0), (2, 1)]
    last = data["modules"][-1]
    assert last["projective"] and last["socle"] == 0 and last["head"] == 1
    assert last["rep"]["g"] == [[["-1/1"], ["0/1"]], [["0/1"], ["1/1"]]]
    assert last["rep"]["h"] == [[["0/1"], ["0/1"]], [["1/1"], ["0/1"]]]


def test_mult_table_green_json_deterministic(capsys):
    _, first, _ = run(capsys, "mult-table", "--n", "3", "--format", "json")
    _, second, _ = run(capsys, "mult-table", "--n", "3", "--format", "json", "--jobs", "2")
    assert first == second
    data = json.loads(first)
    assert len(data["table"]) == 9 and all(len(row) == 9 for row in data["table"])
    # x * x with x = M(2,0) at index 3
    assert data["table"][3][3] == [{"l": 1, "r": 2, "coeff": "1"}, {"l": 3, "r": 0, "coeff": "1"}]


def test_mult_table_oracle_matches_formula(capsys):
    _, formula, _ = run(capsys, "mult-table", "--n", "3", "--format", "json")
    _, oracle, _ = run(capsys, "mult-table", "--n", "3", "--format", "json", "--engine", "oracle")
    assert formula == oracle


def test_mult_table_taft(capsys):
    code, out, _ = run(capsys, "mult-table", "--n", "2", "--algebra", "taft", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert len(data["table"]) == 4
    # h * g = q g h = -gh for n = 2; basis order (0,0), (0,1), (1,0), (1,1)
    assert data["table"][1][2] == [{"g": 1, "h": 1, "coeff": ["-1/1"]}]


def test_verify_iso_n5(capsys):
    code, out, _ = run(capsys, "verify", "--n", "5", "--suite", "iso")
    assert code == EXIT_OK
    assert "5/5 checks passed" in out


def test_verify_all_n2(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--suite", "all", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["passed"] and all(c["passed"] for c in data["checks"])


def test_verify_failure_reports_counterexample(capsys, monkeypatch):
    import taftgreen.verify as verify
    from taftgreen.green import GreenElement

    monkeypatch.setattr(verify, "basis_product", lambda n, a, b: GreenElement.basis(n, 1, 0))
    code, out, _ = run(capsys, "verify", "--n", "2", "--suite", "oracle", "--format", "json")
    assert code == EXIT_MISMATCH
    data = json.loads(out)
    assert data["first_failure"]["counterexample"]["left"] == {"l": 1, "r": 0}


def test_out_file(tmp_path, capsys):
    target = tmp_path / "rel.json"
    code, out, _ = run(capsys, "presentation", "--n", "3", "--format", "json", "--out", str(target))
    assert code == EXIT_OK and out == ""
    assert json.loads(target.read_text())["n"] == 3
