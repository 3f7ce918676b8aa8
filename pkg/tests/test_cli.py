"""Command line behavior: output shapes, exit codes, route dispatch."""

import json
import subprocess
import sys

import pytest

from multidescent import cli


def run_cli(*argv):
    return cli.main(list(argv))


def test_count_text_lists_all_four_routes(capsys):
    code = run_cli("count", "--set", "2", "--n", "3", "--m", "2")
    out = capsys.readouterr().out
    assert code == cli.EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert {line.split()[0] for line in lines} == {
        "naive",
        "prefix",
        "recurrence",
        "jacobi-trudi",
    }
    assert all(line.split()[1] == "5" for line in lines)


def test_count_json_payload(capsys):
    code = run_cli(
        "count", "--set", "2", "--n", "3", "--m", "2", "--format", "json"
    )
    assert code == cli.EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["set"] == [2]
    assert payload["n"] == 3 and payload["m"] == 2
    assert payload["agree"] is True
    assert payload["counts"] == {
        "naive": "5",
        "prefix": "5",
        "recurrence": "5",
        "jacobi-trudi": "5",
    }


def test_count_single_method(capsys):
    code = run_cli(
        "count", "--set", "2", "--n", "3", "--m", "2", "--method", "prefix"
    )
    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.split() == ["prefix", "5"]


def test_count_skips_inapplicable_routes_in_all_mode(capsys):
    # one cell total: the determinant route has no room and is skipped
    code = run_cli("count", "--set", "2", "--n", "1", "--m", "1")
    captured = capsys.readouterr()
    assert code == cli.EXIT_OK
    assert "jacobi-trudi: skipped" in captured.err
    lines = captured.out.strip().splitlines()
    assert len(lines) == 3
    assert all(line.split()[1] == "0" for line in lines)


def test_count_explicit_inapplicable_route_is_a_domain_error(capsys):
    code = run_cli(
        "count", "--set", "2", "--n", "1", "--m", "1", "--method", "jacobi-trudi"
    )
    assert code == cli.EXIT_DOMAIN
    assert "domain error" in capsys.readouterr().err


def test_count_empty_set_counts_the_sorted_word(capsys):
    code = run_cli("count", "--set", "", "--n", "3", "--m", "2")
    assert code == cli.EXIT_OK
    for line in capsys.readouterr().out.strip().splitlines():
        assert line.split()[1] == "1"


def test_count_budget_refusal_and_override(capsys):
    code = run_cli(
        "count",
        "--set", "2", "--n", "3", "--m", "2",
        "--method", "naive",
        "--budget-cells", "5",
    )
    assert code == cli.EXIT_BUDGET
    assert "budget exceeded" in capsys.readouterr().err

    code = run_cli(
        "count",
        "--set", "2", "--n", "3", "--m", "2",
        "--method", "naive",
        "--budget-cells", "6",
    )
    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.split()[1] == "5"


def test_count_disagreement_exits_with_verify_code(capsys, monkeypatch):
    monkeypatch.setattr(
        cli.formulas, "descent_count", lambda ds, n, m: 999
    )
    code = run_cli("count", "--set", "2", "--n", "3", "--m", "2")
    captured = capsys.readouterr()
    assert code == cli.EXIT_VERIFY
    assert "DISAGREEMENT" in captured.err


def test_dinf_text_and_json(capsys):
    assert run_cli("dinf", "--set", "2", "--n", "5") == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == "14"

    assert (
        run_cli("dinf", "--set", "2", "--n", "5", "--format", "json")
        == cli.EXIT_OK
    )
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"set": [2], "n": 5, "value": "14"}


def test_dinf_rejects_nonpositive_n(capsys):
    assert run_cli("dinf", "--set", "2", "--n", "0") == cli.EXIT_USAGE


def test_coeffs_json_payload(capsys):
    code = run_cli("coeffs", "--set", "2", "--k", "0", "--format", "json")
    assert code == cli.EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"k": 0, "coeffs": ["-1", "1", "1"]}


def test_coeffs_default_offset_is_minus_one(capsys):
    code = run_cli("coeffs", "--set", "2")
    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == "offset -1: 0 2 1"


def test_coeffs_empty_set_is_a_domain_error(capsys):
    assert run_cli("coeffs", "--set", "") == cli.EXIT_DOMAIN


def test_stabilize_reports_point_and_sweep(capsys):
    code = run_cli("stabilize", "--set", "4,8,9", "--n", "4")
    assert code == cli.EXIT_OK
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0] == "M = 7"
    assert lines[1] == "sweep at n = 4:"
    counts = [int(line.split("count=")[1].split()[0]) for line in lines[2:]]
    assert counts == [0, 0, 286, 962, 1330, 1450, 1474, 1474, 1474]
    assert sum("(stable)" in line for line in lines) == 3


def test_stabilize_json(capsys):
    code = run_cli("stabilize", "--set", "4,8,9", "--n", "4", "--format", "json")
    assert code == cli.EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["stabilization"] == 7
    assert payload["n"] == 4
    assert [row["m"] for row in payload["sweep"]] == list(range(1, 10))
    assert payload["sweep"][-1]["count"] == "1474"


def test_stabilize_default_alphabet_clears_the_longest_run(capsys):
    code = run_cli("stabilize", "--set", "1,2")
    assert code == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "sweep at n = 3:" in out


def test_table_csv_output(capsys):
    code = run_cli("table", "--set", "1", "--n-range", "1:3", "--m-range", "1:2")
    assert code == cli.EXIT_OK
    rows = capsys.readouterr().out.strip().splitlines()
    assert rows[0] == "n,m,count"
    assert rows[1:] == ["1,1,0", "1,2,0", "2,1,1", "2,2,1", "3,1,2", "3,2,2"]


def test_table_rows_sorted_by_n_then_m(capsys):
    code = run_cli(
        "table",
        "--set", "2", "--n-range", "1:2", "--m-range", "1:2",
        "--format", "json",
    )
    assert code == cli.EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    keys = [(row["n"], row["m"]) for row in payload["rows"]]
    assert keys == sorted(keys)


def test_table_rejects_backwards_range(capsys):
    code = run_cli("table", "--set", "1", "--n-range", "3:1", "--m-range", "1:2")
    assert code == cli.EXIT_USAGE


def test_usage_errors_exit_one(capsys):
    assert run_cli("count", "--set", "2,x", "--n", "3", "--m", "1") == 1
    assert run_cli("count", "--set", "0", "--n", "3", "--m", "1") == 1
    assert run_cli("count", "--set", "2") == 1  # missing --n/--m
    assert run_cli("bogus") == 1
    assert run_cli() == 1


def test_help_exits_zero(capsys):
    assert run_cli("--help") == 0
    assert "count" in capsys.readouterr().out


def test_verify_quick_passes(capsys):
    code = run_cli("verify", "--quick")
    out = capsys.readouterr().out
    assert code == cli.EXIT_OK
    lines = out.strip().splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_verify_failure_exits_three(capsys, monkeypatch):
    from multidescent.polybasis import Check, Report

    broken = Report("rigged", (Check("always wrong", 0, 1),))
    monkeypatch.setattr(cli.verify, "full_suite", lambda quick: [broken])
    code = run_cli("verify", "--quick")
    captured = capsys.readouterr()
    assert code == cli.EXIT_VERIFY
    assert "FAIL rigged" in captured.out
    assert "always wrong" in captured.out


def test_installed_entry_point_round_trip():
    proc = subprocess.run(
        [
            sys.executable, "-c",
            "from multidescent.cli import console; console()",
            "count", "--set", "2", "--n", "3", "--m", "2", "--format", "json",
        ],
        capture_output=True,
        text=True,
    )
    # SystemExit code propagates through the console wrapper
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["agree"] is True
