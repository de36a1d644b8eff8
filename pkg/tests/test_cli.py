import json

import pytest

from cyclo_constants.cli import COMMANDS, RunConfig, UsageError, build_parser, main, run


def run_json(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


def test_nu_xi_example(capsys):
    code, rep = run_json(capsys, "nu-xi", "--n", "12")
    assert code == 0
    assert {k: rep["result"][k] for k in ("nu", "xi", "complete")} == {"nu": 10, "xi": 10, "complete": True}
    assert rep["config"] == {
        "command": "nu-xi", "n": 12, "coefficient_bound": 3, "max_degree": None,
        "output_format": "json", "output_path": None,
    }


def test_field_delta_prime(capsys):
    code, rep = run_json(capsys, "field-delta", "--n", "3")
    assert code == 0
    assert rep["result"]["generators"] == ["v"] and rep["result"]["f"] == []
    assert rep["result"]["v"] == [{"coeff": [1, 0], "exp": [1, 1, 1]}]


def test_minimal_elements_n30(capsys):
    code, rep = run_json(capsys, "minimal-elements", "--n", "30", "--bound", "1")
    res = rep["result"]
    assert code == 0
    assert len(res["elements"]) >= 32 and res["complete"] is False
    assert res["witness_in_elements"] and res["nonstandard_witness_weight"] == 9


def test_effective_defaults_are_echoed(capsys):
    _, rep = run_json(capsys, "constants-delta", "--n", "3")
    assert rep["config"]["max_degree"] == 6
    assert [c["degree"] for c in rep["result"]["constants"]] == [3, 6]


def test_help_lists_defaults(capsys):
    with pytest.raises(SystemExit) as e:
        build_parser().parse_args(["--help"])
    assert e.value.code == 0
    text = capsys.readouterr().out
    assert "default: 3" in text and "default: 2n" in text and "default: json" in text
    for c in COMMANDS:
        assert c in text


@pytest.mark.parametrize("argv", [["nu-xi", "--n", "2"], ["bogus", "--n", "5"], ["nu-xi"], ["nu-xi", "--n", "x"]])
def test_usage_errors_exit_1(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as e:
        code = e.code
    assert code == 1


def test_unwritable_output(tmp_path):
    assert main(["nu-xi", "--n", "6", "--out", str(tmp_path / "missing" / "r.json")]) == 1


def test_unsupported_field_delta_is_usage(capsys):
    assert main(["field-delta", "--n", "30"]) == 1
    assert "explore" in capsys.readouterr().err


def test_darboux_over_budget_is_usage():
    assert main(["darboux-search", "--n", "30"]) == 1


def test_verification_failure_exit_2(monkeypatch, capsys):
    import cyclo_constants.cli as cli

    monkeypatch.setitem(cli.HANDLERS, "nu-xi", lambda cfg, ctx: ({"forced": True}, False))
    code = main(["nu-xi", "--n", "6"])
    assert code == 2
    rep = json.loads(capsys.readouterr().out)
    assert rep["status"] == "verification_failed"


def test_text_and_file_output(tmp_path):
    path = tmp_path / "r.txt"
    assert main(["cyclotomic", "--n", "15", "--format", "text", "--out", str(path)]) == 0
    text = path.read_text()
    assert "result.phi: [1, -1, 0, 1, -1, 1, 0, -1, 1]" in text
    assert 'config.command: "cyclotomic"' in text


def test_run_rejects_unknown_command():
    with pytest.raises(UsageError):
        run(RunConfig(command="nope", n=5))


@pytest.mark.parametrize("cmd,n", [("explore", 12), ("generators-d", 3), ("verify-all", 4)])
def test_other_commands(cmd, n, capsys):
    code, rep = run_json(capsys, cmd, "--n", str(n))
    assert code == 0 and rep["status"] == "ok"
